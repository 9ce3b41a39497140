// mpalg: command-line workbench for the multiset partition algebra.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 resource-cap refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "mpa/algebra.hpp"
#include "mpa/centralizer.hpp"
#include "mpa/golden.hpp"
#include "mpa/symfunc.hpp"
#include "mpa/text.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

mpa::Limits limits_from_env() {
    mpa::Limits limits;
    auto read = [](const char* name, long long& slot) {
        if (const char* v = std::getenv(name)) slot = std::atoll(v);
    };
    read("MPALG_MAX_PARTITIONS", limits.max_partitions);
    read("MPALG_MAX_BASIS", limits.max_basis);
    read("MPALG_MAX_NNZ", limits.max_nnz);
    return limits;
}

void emit(const std::string& command, bool machine, const json& data, const std::string& text) {
    if (machine) {
        json out{{"schema", "mpalg/v1"}, {"command", command}, {"data", data}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text;
    }
}

json element_to_json(const mpa::AlgebraElement& e) {
    json terms = json::array();
    for (const auto& [pi, poly] : e.terms())
        terms.push_back({{"partition", mpa::msp_to_json(pi)}, {"poly", mpa::poly_to_json(poly)}});
    return {{"r", e.r()}, {"k", e.k()}, {"terms", std::move(terms)}};
}

std::string element_to_text(const mpa::AlgebraElement& e) {
    if (e.is_zero()) return "0\n";
    std::string out;
    for (const auto& [pi, poly] : e.terms())
        out += "(" + poly.str() + ") * X" + mpa::format_msp(pi) + "\n";
    return out;
}

std::vector<std::pair<mpa::MultisetPartition, mpa::MultisetPartition>> read_pairs_file(
    const std::string& path, int k) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--pairs", "cannot open " + path);
    std::vector<std::pair<mpa::MultisetPartition, mpa::MultisetPartition>> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto sep = line.find(';');
        if (sep == std::string::npos)
            throw mpa::ParseError(0, "line " + std::to_string(lineno) + ": expected 'pi ; gamma'");
        out.emplace_back(mpa::parse_msp(line.substr(0, sep), k),
                         mpa::parse_msp(line.substr(sep + 1), k));
    }
    return out;
}

json mismatch_to_json(const mpa::VerifyMismatch& m) {
    return {{"tau", mpa::msp_to_json(m.tau)},
            {"structural", mpa::rational_to_json(m.structural)},
            {"oracle", mpa::rational_to_json(m.oracle)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the multiset partition algebra MP_{r,k}(x)"};
    app.require_subcommand(1);
    mpa::Limits limits = limits_from_env();

    std::string format = "text";
    app.add_option("--format", format, "output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    int r = 0, k = 1, n = 0, d = 0;
    std::string pi_text, gamma_text, lambda_text, mu_text, nu_text, gamma_part_text, pairs_file;
    int max_len = -1;
    bool exhaustive = false, per_irrep = false, count_only = false;
    int threads = static_cast<int>(std::min(4u, std::max(1u, std::thread::hardware_concurrency())));

    auto* c_product = app.add_subcommand("product", "structural product X_pi . X_gamma");
    c_product->add_option("--r", r)->required();
    c_product->add_option("--k", k)->required();
    c_product->add_option("--pi", pi_text)->required();
    c_product->add_option("--gamma", gamma_text)->required();

    auto* c_identity = app.add_subcommand("identity", "the identity element I_{r,k}");
    c_identity->add_option("--r", r)->required();
    c_identity->add_option("--k", k)->required();

    auto* c_enum = app.add_subcommand("enumerate", "list Pi_{r,k} (or Pi_{r,k,n} via --max-len)");
    c_enum->add_option("--r", r)->required();
    c_enum->add_option("--k", k)->required();
    c_enum->add_option("--max-len", max_len);
    c_enum->add_flag("--count-only", count_only);

    auto* c_verify = app.add_subcommand("verify", "compare the product against the matrix oracle");
    c_verify->add_option("--r", r)->required();
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--n", n)->required();
    c_verify->add_flag("--exhaustive", exhaustive);
    c_verify->add_option("--pairs", pairs_file, "file of 'pi ; gamma' lines");
    c_verify->add_option("--threads", threads);

    auto* c_odim = app.add_subcommand("oracle-dim", "dimension of A_{r,k}(n) from the matrix side");
    c_odim->add_option("--r", r)->required();
    c_odim->add_option("--k", k)->required();
    c_odim->add_option("--n", n)->required();

    auto* c_dims = app.add_subcommand("dims", "dim A_{r,k}(n) from the generating function");
    c_dims->add_option("--n", n)->required();
    c_dims->add_option("--r", r)->required();
    c_dims->add_option("--k", k)->required();
    c_dims->add_flag("--per-irrep", per_irrep);

    auto* c_branch = app.add_subcommand("branch", "branching multiplicity");
    c_branch->add_option("--lambda", lambda_text)->required();
    c_branch->add_option("--mu", mu_text)->required();
    c_branch->add_option("--d", d)->required();
    c_branch->add_option("--k", k);

    auto* c_restrict = app.add_subcommand("restrict", "restriction multiplicity (Kronecker)");
    c_restrict->add_option("--lambda", lambda_text)->required();
    c_restrict->add_option("--nu", nu_text)->required();
    c_restrict->add_option("--gamma", gamma_part_text)->required();

    auto* c_repro = app.add_subcommand("repro", "reproduce the worked examples; prints a table");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    const bool machine = format == "machine";

    try {
        if (*c_product) {
            auto pi = mpa::parse_msp(pi_text, k);
            auto gamma = mpa::parse_msp(gamma_text, k);
            if (pi.r() != r || gamma.r() != r)
                throw mpa::ParseError(0, "partition size does not match --r");
            auto prod = multiply(mpa::AlgebraElement::basis(pi), mpa::AlgebraElement::basis(gamma));
            emit("product", machine, element_to_json(prod), element_to_text(prod));
        } else if (*c_identity) {
            auto id = mpa::identity_element(r, k, limits);
            emit("identity", machine, element_to_json(id), element_to_text(id));
        } else if (*c_enum) {
            std::optional<int> cap;
            if (max_len >= 0) cap = max_len;
            if (count_only) {
                long long count = mpa::count_partitions({r, r}, k, cap);
                emit("enumerate", machine, {{"count", count}}, std::to_string(count) + "\n");
            } else {
                auto all = mpa::enumerate_msp(r, k, cap, limits);
                json blocks = json::array();
                std::string text;
                for (const auto& pi : all) {
                    blocks.push_back(mpa::msp_to_json(pi));
                    text += mpa::format_msp(pi) + "\n";
                }
                emit("enumerate", machine,
                     {{"count", all.size()}, {"partitions", std::move(blocks)}}, text);
            }
        } else if (*c_verify) {
            std::vector<mpa::PairVerifyReport> reports;
            if (exhaustive) {
                reports = mpa::verify_all_pairs(r, k, n, threads, limits);
            } else if (!pairs_file.empty()) {
                for (auto& [pi, gamma] : read_pairs_file(pairs_file, k)) {
                    auto res = mpa::verify_isomorphism(pi, gamma, n, limits);
                    reports.push_back({pi, gamma, res.match, res.mismatches});
                }
            } else {
                throw CLI::ValidationError("verify", "need --exhaustive or --pairs FILE");
            }
            size_t bad = 0;
            json jpairs = json::array();
            std::string text;
            for (const auto& rep : reports) {
                if (!rep.match) ++bad;
                json jm = json::array();
                for (const auto& m : rep.mismatches) jm.push_back(mismatch_to_json(m));
                jpairs.push_back({{"pi", mpa::msp_to_json(rep.pi)},
                                  {"gamma", mpa::msp_to_json(rep.gamma)},
                                  {"match", rep.match},
                                  {"mismatches", std::move(jm)}});
                if (!rep.match) {
                    text += "MISMATCH " + mpa::format_msp(rep.pi) + " ; " + mpa::format_msp(rep.gamma);
                    for (const auto& m : rep.mismatches)
                        text += "\n  tau " + mpa::format_msp(m.tau) + " structural " +
                                m.structural.get_str() + " oracle " + m.oracle.get_str();
                    text += "\n";
                }
            }
            text += (bad == 0 ? "all pairs match" : std::to_string(bad) + " pair(s) mismatch");
            text += " (" + std::to_string(reports.size()) + " checked)\n";
            emit("verify", machine,
                 {{"pairs", std::move(jpairs)}, {"all_match", bad == 0}, {"checked", reports.size()}},
                 text);
            if (bad) return kExitMismatch;
        } else if (*c_odim) {
            mpa::MonomialBasis basis(n, k, r, limits);
            long dim = 0;
            for (const auto& pi : mpa::enumerate_msp(r, k, std::nullopt, limits))
                if (orbit_matrix(basis, pi).nnz() > 0) ++dim;
            emit("oracle-dim", machine, {{"dim", dim}}, std::to_string(dim) + "\n");
        } else if (*c_dims) {
            mpa::Integer dim = mpa::algebra_dim(n, r, k, limits);
            json data{{"dim", dim.get_str()}};
            std::string text = dim.get_str() + "\n";
            if (per_irrep) {
                json rows = json::array();
                text += "lambda : dim W^lambda : threshold\n";
                mpa::Integer square_sum = 0;
                for (const auto& lambda : mpa::partitions_of(n)) {
                    mpa::Integer w = mpa::irrep_dimension(lambda, k, r);
                    long t = mpa::min_degree_threshold(lambda, k);
                    square_sum += w * w;
                    rows.push_back({{"lambda", mpa::format_int_partition(lambda)},
                                    {"dim", w.get_str()},
                                    {"threshold", t}});
                    text += mpa::format_int_partition(lambda) + " : " + w.get_str() + " : " +
                            std::to_string(t) + "\n";
                }
                data["per_irrep"] = std::move(rows);
                data["square_sum"] = square_sum.get_str();
                text += "sum of squares: " + square_sum.get_str() + "\n";
            }
            emit("dims", machine, data, text);
        } else if (*c_branch) {
            auto lambda = mpa::parse_int_partition(lambda_text);
            auto mu = mpa::parse_int_partition(mu_text);
            long long b = mpa::branching_multiplicity(lambda, mu, d, k);
            emit("branch", machine, {{"multiplicity", b}}, std::to_string(b) + "\n");
        } else if (*c_restrict) {
            auto lambda = mpa::parse_int_partition(lambda_text);
            auto nu = mpa::parse_int_partition(nu_text);
            auto gamma = mpa::parse_int_partition(gamma_part_text);
            long long g = mpa::restriction_multiplicity(lambda, nu, gamma);
            emit("restrict", machine, {{"multiplicity", g}}, std::to_string(g) + "\n");
        } else if (*c_repro) {
            auto results = mpa::run_golden_checks();
            json rows = json::array();
            std::string text;
            size_t bad = 0;
            for (const auto& res : results) {
                if (!res.pass) ++bad;
                rows.push_back({{"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
                text += std::string(res.pass ? "[PASS] " : "[FAIL] ") + res.name;
                if (!res.pass) text += "  (" + res.detail + ")";
                text += "\n";
            }
            text += bad == 0 ? "all checks pass\n" : std::to_string(bad) + " check(s) fail\n";
            emit("repro", machine, {{"checks", std::move(rows)}, {"all_pass", bad == 0}, {"failed", bad}},
                 text);
            if (bad) return kExitMismatch;
        }
    } catch (const mpa::ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return kExitUsage;
    } catch (const mpa::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
