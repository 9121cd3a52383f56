#include "ncfrieze/cli.hpp"

#include <CLI11.hpp>

#include "ncfrieze/errors.hpp"
#include "ncfrieze/expr.hpp"
#include "ncfrieze/io.hpp"
#include "ncfrieze/quasidet.hpp"

namespace ncfrieze {

namespace {

RingDescriptor parse_ring_flag(const std::string& text) {
    if (text == "rational") return RingDescriptor::rational();
    if (text == "quaternion") return RingDescriptor::quaternion();
    std::string spec = text;
    for (const char* prefix : {"matrix:", "matrix("}) {
        if (spec.rfind(prefix, 0) == 0) {
            std::string digits = spec.substr(std::string(prefix).size());
            if (!digits.empty() && digits.back() == ')') digits.pop_back();
            try {
                return RingDescriptor::matrix(std::stoi(digits));
            } catch (const std::exception&) {
                break;
            }
        }
    }
    throw FormatError("unknown ring '" + text + "' (use rational, quaternion or matrix:N)");
}

std::vector<long> parse_index_list(const std::string& text, const char* label) {
    std::vector<long> indices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            indices.push_back(std::stol(piece));
        } catch (const std::exception&) {
            throw FormatError(std::string(label) + ": '" + text + "' is not a comma-separated index list");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return indices;
}

int print_report(const VerificationReport& report, std::ostream& out, std::ostream& err) {
    for (const Violation& v : report.violations) out << violation_to_string(v) << "\n";
    out << report.summary() << "\n";
    for (const std::string& note : report.notes) err << "note: " << note << "\n";
    return report.ok() ? 0 : 1;
}

void write_result(const Json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << json_to_string(j);
    else
        save_json(j, out_path);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact noncommutative frieze patterns"};
    app.require_subcommand(1);

    // verify
    std::string verify_path, verify_scope = "local";
    CLI::App* verify_cmd = app.add_subcommand("verify", "check frieze relations");
    verify_cmd->add_option("path", verify_path)->required();
    verify_cmd->add_option("--scope", verify_scope)->check(CLI::IsMember({"local", "all"}));

    // tame
    std::string tame_path;
    CLI::App* tame_cmd = app.add_subcommand("tame", "scan neighbouring 3x3 quasideterminants");
    tame_cmd->add_option("path", tame_path)->required();

    // monodromy
    std::string monodromy_path;
    CLI::App* monodromy_cmd = app.add_subcommand("monodromy", "full mu-matrix product");
    monodromy_cmd->add_option("path", monodromy_path)->required();

    // complete
    std::string complete_seed, complete_out;
    CLI::App* complete_cmd = app.add_subcommand("complete", "rebuild a frieze from seed data");
    complete_cmd->add_option("seed", complete_seed)->required();
    complete_cmd->add_option("out", complete_out)->required();

    // quiddity
    CLI::App* quiddity_cmd = app.add_subcommand("quiddity", "quiddity cycle operations");
    quiddity_cmd->require_subcommand(1);
    std::string qx_path, qx_out;
    CLI::App* quiddity_extract = quiddity_cmd->add_subcommand("extract", "cycle of a frieze");
    quiddity_extract->add_option("path", qx_path)->required();
    quiddity_extract->add_option("--out", qx_out);
    std::string qv_path;
    CLI::App* quiddity_verify = quiddity_cmd->add_subcommand("verify", "check the -id product");
    quiddity_verify->add_option("path", qv_path)->required();
    std::string qr_path, qr_out;
    long qr_at = 0;
    CLI::App* quiddity_reduce = quiddity_cmd->add_subcommand("reduce", "three-to-two reduction");
    quiddity_reduce->add_option("path", qr_path)->required();
    quiddity_reduce->add_option("--at", qr_at)->required();
    quiddity_reduce->add_option("--out", qr_out);

    // generate
    CLI::App* generate_cmd = app.add_subcommand("generate", "produce friezes");
    generate_cmd->require_subcommand(1);
    CLI::App* generate_fan_cmd = generate_cmd->add_subcommand("fan", "fan-triangulation frieze");
    int gen_m = 0;
    std::string gen_ring = "quaternion", gen_profile = "random", gen_out;
    std::uint64_t gen_seed = 1;
    long gen_max_coeff = 3;
    generate_fan_cmd->add_option("--m", gen_m)->required();
    generate_fan_cmd->add_option("--ring", gen_ring);
    generate_fan_cmd->add_option("--seed", gen_seed);
    generate_fan_cmd->add_option("--max-coeff", gen_max_coeff);
    generate_fan_cmd->add_option("--profile", gen_profile)->check(CLI::IsMember({"random", "ones"}));
    generate_fan_cmd->add_option("out", gen_out)->required();

    // quasidet
    std::string quasidet_path, quasidet_rows, quasidet_cols, quasidet_pos = "3,3";
    CLI::App* quasidet_cmd = app.add_subcommand("quasidet", "quasideterminant of a submatrix");
    quasidet_cmd->add_option("path", quasidet_path)->required();
    quasidet_cmd->add_option("--rows", quasidet_rows)->required();
    quasidet_cmd->add_option("--cols", quasidet_cols)->required();
    quasidet_cmd->add_option("--pos", quasidet_pos);

    // pit
    std::string pit_lhs, pit_rhs, pit_vars;
    int pit_trials = 5, pit_dim = 3;
    std::uint64_t pit_seed = 1;
    CLI::App* pit_cmd = app.add_subcommand("pit", "free skew field identity test");
    pit_cmd->add_option("lhs", pit_lhs)->required();
    pit_cmd->add_option("--rhs", pit_rhs)->required();
    pit_cmd->add_option("--trials", pit_trials);
    pit_cmd->add_option("--dim", pit_dim);
    pit_cmd->add_option("--seed", pit_seed);
    pit_cmd->add_option("--vars", pit_vars);

    try {
        std::vector<const char*> argv{"ncfrieze"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (verify_cmd->parsed()) {
            Frieze f = load_frieze(verify_path);
            VerificationReport report = verify_scope == "all" ? verify_all(f) : verify_local(f);
            return print_report(report, out, err);
        }
        if (tame_cmd->parsed()) {
            return print_report(tame_scan(load_frieze(tame_path)), out, err);
        }
        if (monodromy_cmd->parsed()) {
            Frieze f = load_frieze(monodromy_path);
            RingMatrix product = monodromy(f);
            bool is_neg_id = mat_eq(product, mat_neg_identity(2, f.ring()));
            out << matrix_to_string(product) << "\n";
            out << "-id: " << (is_neg_id ? "yes" : "no") << "\n";
            return is_neg_id ? 0 : 1;
        }
        if (complete_cmd->parsed()) {
            QuiddityCycle seed = load_cycle(complete_seed);
            Frieze f = complete(seed);
            save_json(frieze_to_json(f), complete_out);
            return 0;
        }
        if (quiddity_extract->parsed()) {
            write_result(cycle_to_json(extract(load_frieze(qx_path))), qx_out, out);
            return 0;
        }
        if (quiddity_verify->parsed()) {
            bool ok = verify_cycle(load_cycle(qv_path));
            out << (ok ? "quiddity cycle: product is -id" : "not a quiddity cycle: product is not -id")
                << "\n";
            return ok ? 0 : 1;
        }
        if (quiddity_reduce->parsed()) {
            write_result(cycle_to_json(reduce_at(load_cycle(qr_path), qr_at)), qr_out, out);
            return 0;
        }
        if (generate_fan_cmd->parsed()) {
            Frieze f = generate_fan(gen_m, parse_ring_flag(gen_ring), gen_seed, gen_max_coeff,
                                    gen_profile == "ones" ? FanProfile::all_ones
                                                          : FanProfile::random_values);
            save_json(frieze_to_json(f), gen_out);
            return 0;
        }
        if (quasidet_cmd->parsed()) {
            Frieze f = load_frieze(quasidet_path);
            std::vector<long> rows = parse_index_list(quasidet_rows, "--rows");
            std::vector<long> cols = parse_index_list(quasidet_cols, "--cols");
            std::vector<long> pos = parse_index_list(quasidet_pos, "--pos");
            if (rows.size() != cols.size() || rows.size() < 2)
                throw FormatError("--rows and --cols need equally many (>= 2) indices");
            if (pos.size() != 2) throw FormatError("--pos needs exactly two indices");
            std::vector<RingValue> data;
            for (long r : rows)
                for (long c : cols) data.push_back(f.extended(r, c));
            RingMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()), f.ring(),
                           std::move(data));
            out << value_to_string(quasidet(sub, static_cast<int>(pos[0]), static_cast<int>(pos[1])))
                << "\n";
            return 0;
        }
        if (pit_cmd->parsed()) {
            std::vector<std::string> vars;
            if (!pit_vars.empty()) {
                std::size_t pos = 0;
                while (pos <= pit_vars.size()) {
                    std::size_t comma = pit_vars.find(',', pos);
                    vars.push_back(pit_vars.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            } else {
                // Infer the variable set from the symbols of both sides.
                std::set<std::string> symbols;
                for (const std::string& text : {pit_lhs, pit_rhs}) {
                    for (std::size_t n = 0; n < text.size(); ++n) {
                        if (!std::isalpha(static_cast<unsigned char>(text[n]))) continue;
                        std::size_t start = n;
                        while (n < text.size() && std::isalpha(static_cast<unsigned char>(text[n]))) ++n;
                        symbols.insert(text.substr(start, n - start));
                    }
                }
                vars.assign(symbols.begin(), symbols.end());
                if (vars.empty()) vars.push_back("x");
            }
            RingDescriptor ring = RingDescriptor::free_skew(vars);
            PitOptions options;
            options.trials = pit_trials;
            options.dim = pit_dim;
            options.seed = pit_seed;
            bool equal = pit_equal(parse_expr(pit_lhs, ring), parse_expr(pit_rhs, ring), options);
            out << (equal ? "equal" : "not equal") << "\n";
            return equal ? 0 : 1;
        }
        err << "no command given\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return 2;
    } catch (const NotInvertible& e) {
        err << "not invertible: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ncfrieze
