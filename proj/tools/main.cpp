// sfs: sequence generation and verification front end.

#include "sfs/complexity.hpp"
#include "sfs/folding.hpp"
#include "sfs/sturmian.hpp"
#include "sfs/suite.hpp"
#include "sfs/sumfree.hpp"
#include "sfs/wnum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace sfs;

namespace {

constexpr int kUsage = 2;

std::string join(const std::vector<std::uint64_t> &v, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n && i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    return out;
}

sturmian::SlopeSpec slope_arg(const std::string &alpha, const std::string &rho) {
    const auto a = sturmian::QuadSurd::parse(alpha);
    if (rho.empty()) return sturmian::find_intercept(a);
    sturmian::SlopeSpec spec{a, sturmian::QuadSurd::parse(rho)};
    spec.validate();
    return spec;
}

struct GenArgs {
    std::string name;
    unsigned k = 1;
    std::uint64_t len = 20;
    std::string alpha, rho;
    bool csv = false;
};

int run_gen(const GenArgs &g) {
    auto symbols = [&](const Word &w, IndexBase base) {
        std::cout << (g.csv ? to_index_csv(w.view(), base) : to_symbols(w) + "\n");
    };
    if (g.name == "pkf") {
        symbols(folding::pkf_stream(g.k).prefix(g.len), IndexBase::Zero);
    } else if (g.name == "tau") {
        symbols(folding::tau_stream(g.k).prefix(g.len), IndexBase::Zero);
    } else if (g.name == "what-complement") {
        symbols(folding::complement_stream(g.k).prefix(g.len), IndexBase::Zero);
    } else if (g.name == "sturmian") {
        if (g.alpha.empty()) throw CLI::ValidationError("--alpha", "required for sturmian");
        symbols(sturmian::mechanical_stream(slope_arg(g.alpha, g.rho)).prefix(g.len), IndexBase::Zero);
    } else if (g.name == "v") {
        const auto trace = theta_forward(folding::pkf_stream(g.k), g.len);
        if (g.csv) {
            std::cout << to_index_csv(trace.v_word().view(), IndexBase::One);
        } else {
            std::cout << trace.v_string() << "\n";
        }
    } else if (g.name == "sumfree") {
        const auto trace = theta_members(folding::pkf_stream(g.k), g.len);
        std::cout << join(trace.members, g.len) << "\n";
    } else {
        // mu, alpha, diff: the first len gaps.
        const auto trace = theta_members(folding::pkf_stream(g.k), g.len + 1);
        const auto c = gap_counters(trace);
        const auto &v = g.name == "mu" ? c.mu : g.name == "alpha" ? c.alpha : c.d;
        std::cout << join(v, g.len) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> checks;
    std::string k, config, out;
    std::uint64_t n = 0;
    unsigned jobs = 0, m = 0, depth = 0;
    std::vector<std::string> slopes;
};

int run_verify(const VerifyArgs &v, const CLI::App &cmd) {
    suite::SuiteConfig config =
        v.config.empty() ? suite::SuiteConfig{} : suite::SuiteConfig::from_file(v.config);
    if (!v.checks.empty()) config.checks = v.checks;
    if (cmd.count("--k")) config.ks = suite::parse_k_range(v.k);
    if (cmd.count("--n")) config.n = v.n;
    if (cmd.count("--out")) config.out = v.out;
    if (cmd.count("--jobs")) config.jobs = v.jobs;
    if (cmd.count("--m")) config.conjecture_m = v.m;
    if (cmd.count("--depth")) config.kernel_depth = v.depth;
    if (cmd.count("--slope")) config.slopes = v.slopes;
    config.validate();

    const auto reports = suite::run_suite(config);
    if (config.out.empty()) {
        suite::write_jsonl(std::cout, reports);
    } else {
        std::ofstream os(config.out);
        if (!os) throw suite::ConfigError("cannot write '" + config.out + "'");
        suite::write_jsonl(os, reports);
    }
    suite::write_table(std::cerr, reports);
    return suite::exit_code(reports);
}

int report(const CheckResult &r) {
    json j{{"status", std::string(to_string(r.status))},
           {"fail_index", r.fail_index ? json(*r.fail_index) : json(nullptr)}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    std::cout << j.dump() << "\n";
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sum-free sets from morphic and Sturmian sequences"};
    app.require_subcommand(1);
    int code = 0;

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Print a sequence prefix");
    gen_cmd->add_option("name", gen.name, "Sequence")
        ->required()
        ->check(CLI::IsMember(
            {"pkf", "tau", "mu", "alpha", "v", "sumfree", "diff", "sturmian", "what-complement"}));
    gen_cmd->add_option("--k", gen.k, "Folding parameter")->check(CLI::Range(1u, 64u));
    gen_cmd->add_option("--len", gen.len, "Number of terms")->check(CLI::Range(1ull, 100000000ull));
    gen_cmd->add_option("--alpha", gen.alpha, "Slope p,q,r,D (sturmian)");
    gen_cmd->add_option("--rho", gen.rho, "Intercept p,q,r,D or p,r (default: searched)");
    gen_cmd->add_flag("--csv", gen.csv, "index,letter lines");
    gen_cmd->callback([&] { code = run_gen(gen); });

    VerifyArgs ver;
    auto *ver_cmd = app.add_subcommand("verify", "Run verification checks, JSONL on stdout");
    ver_cmd->add_option("checks", ver.checks, "Checks, or 'all'");
    ver_cmd->add_option("--k", ver.k, "k values: 3, 1..4 or 1,3");
    ver_cmd->add_option("--n", ver.n, "Prefix length / number of terms")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--out", ver.out, "Write JSONL here instead of stdout");
    ver_cmd->add_option("--jobs", ver.jobs, "Parallel cells (0: all cores)");
    ver_cmd->add_option("--config", ver.config, "JSON config file");
    ver_cmd->add_option("--m", ver.m, "Conjecture run count");
    ver_cmd->add_option("--depth", ver.depth, "Kernel depth max_a");
    ver_cmd->add_option("--slope", ver.slopes, "Slope 'alpha' or 'alpha;rho'");
    ver_cmd->callback([&] { code = run_verify(ver, *ver_cmd); });

    auto *wn = app.add_subcommand("wnum", "W-numeration");
    wn->require_subcommand(1);
    unsigned wk = 1, wl = 1, wr = 1, wmax = 30;
    std::string wn_value, wn_digits;
    std::size_t wn_len = 10000;

    auto *enc = wn->add_subcommand("encode", "Valid expansion of n");
    enc->add_option("--k", wk)->check(CLI::Range(1u, 64u));
    enc->add_option("--n", wn_value)->required();
    enc->callback([&] {
        std::cout << wnum::encode(wk, wnum::BigInt(wn_value)).to_string() << "\n";
    });

    auto *dec = wn->add_subcommand("decode", "Value of a digit word");
    dec->add_option("--k", wk)->check(CLI::Range(1u, 64u));
    dec->add_option("--digits", wn_digits, "Comma-separated, most significant first")->required();
    dec->callback([&] { std::cout << wnum::decode(wk, wnum::WExpansion::parse(wn_digits)) << "\n"; });

    auto *val = wn->add_subcommand("validate", "Is a digit word a valid expansion");
    val->add_option("--k", wk)->check(CLI::Range(1u, 64u));
    val->add_option("--digits", wn_digits)->required();
    val->callback([&] {
        const bool ok = wnum::is_valid(wk, wnum::WExpansion::parse(wn_digits));
        std::cout << (ok ? "valid" : "invalid") << "\n";
        code = ok ? 0 : 1;
    });

    auto *ids = wn->add_subcommand("check-identities", "W identities for n <= N");
    ids->add_option("--k", wk)->check(CLI::Range(1u, 64u));
    ids->add_option("--n", wmax);
    ids->callback([&] { code = report(wnum::check_w_identities(wk, wmax)); });

    auto *con = wn->add_subcommand("check-construction", "Construction lemma clauses");
    con->add_option("--k", wk)->check(CLI::Range(1u, 64u));
    con->add_option("--l", wl)->check(CLI::PositiveNumber);
    con->add_option("--r", wr)->check(CLI::PositiveNumber);
    con->add_option("--n", wmax);
    con->callback([&] { code = report(wnum::check_construction(wk, wl, wr, wmax)); });

    unsigned max_a = 4;
    auto *ker = wn->add_subcommand("kernel", "Kernel evidence counts for max_a = 0..A");
    ker->add_option("--k", wk)->check(CLI::Range(1u, 64u));
    ker->add_option("--max-a", max_a);
    ker->add_option("--n", wn_len);
    ker->callback([&] {
        json counts = json::array();
        for (unsigned a = 0; a <= max_a; ++a) counts.push_back(wnum::kernel_evidence(wk, a, wn_len));
        std::cout << json{{"k", wk}, {"n", wn_len}, {"counts", counts}}.dump() << "\n";
    });

    unsigned ck = 3;
    std::size_t cm = 8;
    std::uint64_t cap = std::uint64_t{1} << 24;
    auto *cx = app.add_subcommand("complexity", "Subword complexity of tau_k and the run conjecture");
    cx->add_option("--k", ck)->check(CLI::Range(1u, 64u));
    cx->add_option("--m", cm)->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    cx->add_option("--cap", cap, "Largest prefix examined");
    cx->callback([&] {
        const auto rep = complexity::check_conjecture(ck, cm, cap);
        const auto &p = rep.profile;
        json j;
        j["f"] = p.f;
        j["d"] = p.d;
        j["a"] = rep.runs.a;
        j["stabilized"] = p.all_stabilized();
        j["prefix_len"] = p.prefix_len;
        j["conjecture"] = std::string(to_string(rep.status));
        if (rep.fail_index) j["fail_index"] = *rep.fail_index;
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        std::cout << j.dump() << "\n";
        code = rep.status == Status::Pass ? 0 : 1;
    });

    auto *st = app.add_subcommand("sturmian", "Sturmian pipeline");
    st->require_subcommand(1);
    std::string alpha, rho;
    std::uint64_t sn = 10000;
    unsigned s_nmax = 50;
    auto *stc = st->add_subcommand("check", "Star parity and the difference-sequence clauses");
    stc->add_option("--alpha", alpha, "p,q,r,D")->required();
    stc->add_option("--rho", rho, "p,q,r,D or p,r (default: searched)");
    stc->add_option("--n", sn)->check(CLI::PositiveNumber);
    stc->add_option("--nmax", s_nmax, "Complexity certificate length");
    stc->callback([&] {
        const auto spec = slope_arg(alpha, rho);
        const auto stream = sturmian::mechanical_stream(spec);
        json j{{"alpha", spec.alpha.to_string()}, {"rho", spec.rho.to_string()}, {"n", sn}};
        bool ok = true;
        for (auto [name, r] : {std::pair{"star_parity", sturmian::check_star_parity(stream, sn)},
                               std::pair{"theorem_d", sturmian::check_theorem_D(stream, sn, s_nmax)}}) {
            j[name] = {{"status", std::string(to_string(r.status))},
                       {"fail_index", r.fail_index ? json(*r.fail_index) : json(nullptr)},
                       {"detail", r.detail}};
            ok = ok && r.passed();
        }
        std::cout << j.dump() << "\n";
        code = ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    } catch (const suite::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError &e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kUsage;
    } catch (const sturmian::HypothesisError &e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
