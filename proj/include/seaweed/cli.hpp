// Command line front end. Subcommands: build, verify, diagram, sweep,
// oracle, module-ops. Exit codes: 0 verified/pass, 1 verification failure,
// 2 usage error. All JSON output uses canonical key order and LF endings.
#pragma once

#include "serialize.hpp"
#include "sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace seaweed::cli {

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " entry: '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

inline int default_jobs() {
    if (const char* env = std::getenv("SEAWEED_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// payload goes to --out when given, stdout otherwise
inline void emit(const std::string& payload, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_file);
    f << payload;
}

inline std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Richardson elements of seaweed Lie algebras in gl_n"};
    app.require_subcommand(1);

    std::string a_str, b_str, delta_str, orientation, format, out_file;
    int n = 0, jobs = detail::default_jobs(), samples = 200, pairs = 20, max_n = 8;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_ab) {
        if (with_ab) {
            cmd->add_option("--a", a_str, "comma separated parts of the upper composition");
            cmd->add_option("--b", b_str, "comma separated parts of the lower composition");
        }
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"", "json", "text", "dot"}));
        cmd->add_option("--out", out_file, "write the output to a file");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "construct and certify a Richardson element");
    add_common(cmd_build, true);
    CLI::App* cmd_verify = app.add_subcommand("verify", "certify the constructed element only");
    add_common(cmd_verify, true);
    CLI::App* cmd_diagram = app.add_subcommand("diagram", "numbered arrow diagram of a seaweed");
    add_common(cmd_diagram, true);
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "verify every composition pair of size n");
    cmd_sweep->add_option("--n", n, "matrix size")->required();
    cmd_sweep->add_option("--jobs", jobs, "worker count");
    cmd_sweep->add_option("--max-n", max_n, "largest permitted n");
    add_common(cmd_sweep, false);
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "randomized maximality probe");
    cmd_oracle->add_option("--n", n, "matrix size")->required();
    cmd_oracle->add_option("--samples", samples, "nilradical samples per seaweed");
    cmd_oracle->add_option("--pairs", pairs, "number of sampled seaweeds");
    cmd_oracle->add_option("--seed", seed, "random seed");
    cmd_oracle->add_option("--jobs", jobs, "worker count");
    add_common(cmd_oracle, false);
    CLI::App* cmd_module = app.add_subcommand("module-ops", "build the rigid module for a Delta-dimension vector");
    cmd_module->add_option("--delta-dim", delta_str, "comma separated Delta-dimension vector")->required();
    cmd_module->add_option("--orientation", orientation, "per-edge tokens <,>,. left to right")->required();
    add_common(cmd_module, false);

    std::vector<const char*> argv{"seaweed"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_build->parsed() || cmd_verify->parsed() || cmd_diagram->parsed()) {
            if (a_str.empty() || b_str.empty())
                throw std::invalid_argument("--a and --b are required");
            Composition a(detail::parse_int_list(a_str, "--a"));
            Composition b(detail::parse_int_list(b_str, "--b"));
            if (a.n != b.n)
                throw std::invalid_argument("compositions sum to different integers: " +
                                            std::to_string(a.n) + " vs " + std::to_string(b.n));
            if (cmd_diagram->parsed()) {
                BlockData bd = block_data(a, b);
                TypeAQuiver q = seaweed_quiver(bd);
                ArrowDiagram dia = arrow_diagram(bd.e, q);
                if (format == "json") {
                    Json j;
                    j["n"] = bd.n;
                    j["orientation"] = q.orientation_string();
                    j["diagram"] = diagram_to_json(dia);
                    detail::emit(detail::json_dump(j), out_file, out);
                } else {
                    detail::emit(quiver_to_dot(q) + diagram_to_dot(dia), out_file, out);
                }
                return 0;
            }
            SeaweedReport rep = verify_richardson(a, b);
            if (cmd_build->parsed()) {
                if (format == "text")
                    detail::emit(report_to_text(rep), out_file, out);
                else if (format == "dot") {
                    ArrowDiagram dia = arrow_diagram(rep.bd.e, rep.quiver);
                    detail::emit(quiver_to_dot(rep.quiver) + diagram_to_dot(dia), out_file, out);
                } else {
                    detail::emit(detail::json_dump(report_to_json(rep)), out_file, out);
                }
            } else {
                if (format == "json")
                    detail::emit(detail::json_dump(report_to_json(rep)), out_file, out);
                else {
                    std::ostringstream os;
                    os << (rep.verified ? "verified" : "FAILED") << " a=" << a_str << " b=" << b_str
                       << " dim_n=" << rep.dim_n << " ad_rank=" << rep.ad_rank << "\n";
                    detail::emit(os.str(), out_file, out);
                }
            }
            return rep.verified ? 0 : 1;
        }

        if (cmd_sweep->parsed()) {
            if (n < 1 || n > max_n)
                throw std::invalid_argument("sweep size must be between 1 and " + std::to_string(max_n));
            SweepResult res = sweep_all_pairs(n, jobs);
            if (format == "json") {
                Json j;
                j["n"] = res.n;
                j["pairs"] = res.pairs;
                j["verified"] = res.verified;
                Json fails = Json::array();
                for (auto [ia, ib] : res.failures) fails.push_back({ia, ib});
                j["failures"] = std::move(fails);
                detail::emit(detail::json_dump(j), out_file, out);
            } else {
                std::ostringstream os;
                os << "n=" << res.n << " pairs=" << res.pairs << " verified=" << res.verified
                   << " failures=" << res.failures.size() << "\n";
                for (auto [ia, ib] : res.failures) os << "failed pair " << ia << "," << ib << "\n";
                detail::emit(os.str(), out_file, out);
            }
            return res.failures.empty() ? 0 : 1;
        }

        if (cmd_oracle->parsed()) {
            if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
            if (samples < 0 || pairs < 0) throw std::invalid_argument("counts must be nonnegative");
            OracleResult res = oracle_run(n, pairs, samples, seed, jobs);
            bool pass = res.rank_violations == 0 && res.missed_maximum == 0;
            if (format == "json") {
                Json j;
                j["n"] = res.n;
                j["pairs"] = res.pairs;
                j["samples"] = res.samples;
                j["seed"] = res.seed;
                j["rank_violations"] = res.rank_violations;
                j["missed_maximum"] = res.missed_maximum;
                j["attained_by_samples"] = res.attained_by_samples;
                j["pass"] = pass;
                detail::emit(detail::json_dump(j), out_file, out);
            } else {
                std::ostringstream os;
                os << "n=" << res.n << " pairs=" << res.pairs << " samples=" << res.samples
                   << " seed=" << res.seed << " rank_violations=" << res.rank_violations
                   << " missed_maximum=" << res.missed_maximum
                   << " attained_by_samples=" << res.attained_by_samples
                   << " pass=" << (pass ? "true" : "false") << "\n";
                detail::emit(os.str(), out_file, out);
            }
            return pass ? 0 : 1;
        }

        if (cmd_module->parsed()) {
            std::vector<int> d = detail::parse_int_list(delta_str, "--delta-dim");
            TypeAQuiver q = TypeAQuiver::parse_orientation(orientation);
            if (static_cast<int>(d.size()) != q.n)
                throw std::invalid_argument("delta-dim length must be edge count + 1");
            SummandDecomposition dec = build_M(d, q);
            ArrowDiagram dia = arrow_diagram(d, q);
            int ext = ext1_dim(dec.module, dec.module);
            if (format == "json") {
                Json j;
                j["orientation"] = q.orientation_string();
                j["delta"] = d;
                Json supports = Json::array();
                for (const auto& s : dec.summands) supports.push_back(s.support);
                j["summands"] = std::move(supports);
                j["ext1"] = ext;
                j["module"] = representation_to_json(dec.module);
                j["diagram"] = diagram_to_json(dia);
                detail::emit(detail::json_dump(j), out_file, out);
            } else if (format == "dot") {
                detail::emit(quiver_to_dot(q) + diagram_to_dot(dia), out_file, out);
            } else {
                std::ostringstream os;
                os << "orientation: " << q.orientation_string() << "\n";
                os << "summands:";
                for (const auto& s : dec.summands) {
                    os << " {";
                    for (size_t i = 0; i < s.support.size(); ++i)
                        os << (i ? "," : "") << s.support[i];
                    os << "}";
                }
                os << "\nmodule dims:";
                for (int x : dec.module.dims) os << ' ' << x;
                os << "\next1: " << ext << "\n";
                os << "diagram: " << dia.nodes.size() << " nodes, " << dia.edges.size()
                   << " edges\n";
                detail::emit(os.str(), out_file, out);
            }
            return ext == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace seaweed::cli
