#include "sfs/suite.hpp"

#include "sfs/complexity.hpp"
#include "sfs/folding.hpp"
#include "sfs/sturmian.hpp"
#include "sfs/wnum.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>

#include <omp.h>

#ifndef SFS_VERSION
#define SFS_VERSION "0.0.0"
#endif

namespace sfs::suite {

using nlohmann::json;

std::string_view artifact_version() noexcept { return SFS_VERSION; }

json CheckReport::to_json() const {
    json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = std::string(to_string(status));
    j["fail_index"] = fail_index ? json(*fail_index) : json(nullptr);
    if (!detail.empty()) j["detail"] = detail;
    j["elapsed_ms"] = elapsed_ms;
    j["artifact_version"] = artifact_version;
    return j;
}

const std::vector<std::string> &known_checks() {
    static const std::vector<std::string> names = {
        "thm-a",    "thm-b",        "gpd",    "projection", "mu",
        "alpha",    "stars",        "complement", "membership", "wnum",
        "value12",  "construction", "kernel", "sturmian",   "conjecture"};
    return names;
}

namespace {

unsigned parse_unsigned(std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("bad k value '" + std::string(s) + "'");
    }
    return v;
}

template <class T>
T get_number(const json &j, const char *key) {
    const auto &v = j.at(key);
    if (!v.is_number_unsigned()) throw ConfigError(std::string(key) + " must be a non-negative integer");
    return v.get<T>();
}

} // namespace

std::vector<unsigned> parse_k_range(std::string_view text) {
    std::vector<unsigned> out;
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        const unsigned lo = parse_unsigned(text.substr(0, dots));
        const unsigned hi = parse_unsigned(text.substr(dots + 2));
        if (lo > hi) throw ConfigError("empty k range '" + std::string(text) + "'");
        for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
    } else {
        while (true) {
            const auto comma = text.find(',');
            out.push_back(parse_unsigned(text.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            text.remove_prefix(comma + 1);
        }
    }
    for (auto k : out) {
        if (k < 1) throw ConfigError("k must be >= 1");
    }
    return out;
}

SuiteConfig SuiteConfig::from_json(const json &j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> keys = {
        "checks", "k", "n", "identity_n", "enumerate_r", "kernel_depth", "kernel_c", "kernel_n",
        "slopes", "sturmian_n_max", "conjecture_m", "out", "jobs"};
    for (const auto &[key, _] : j.items()) {
        if (!keys.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }
    SuiteConfig c;
    try {
        if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
        if (j.contains("k")) {
            const auto &k = j.at("k");
            if (k.is_string()) {
                c.ks = parse_k_range(k.get<std::string>());
            } else if (k.is_number_unsigned()) {
                c.ks = {k.get<unsigned>()};
            } else {
                c.ks = k.get<std::vector<unsigned>>();
            }
        }
        if (j.contains("n")) c.n = get_number<std::uint64_t>(j, "n");
        if (j.contains("identity_n")) c.identity_n = get_number<unsigned>(j, "identity_n");
        if (j.contains("enumerate_r")) c.enumerate_r = get_number<unsigned>(j, "enumerate_r");
        if (j.contains("kernel_depth")) c.kernel_depth = get_number<unsigned>(j, "kernel_depth");
        if (j.contains("kernel_c")) c.kernel_c = get_number<unsigned>(j, "kernel_c");
        if (j.contains("kernel_n")) c.kernel_n = get_number<std::uint64_t>(j, "kernel_n");
        if (j.contains("slopes")) c.slopes = j.at("slopes").get<std::vector<std::string>>();
        if (j.contains("sturmian_n_max")) c.sturmian_n_max = get_number<unsigned>(j, "sturmian_n_max");
        if (j.contains("conjecture_m")) c.conjecture_m = get_number<std::size_t>(j, "conjecture_m");
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("jobs")) c.jobs = get_number<unsigned>(j, "jobs");
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    return c;
}

SuiteConfig SuiteConfig::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

void SuiteConfig::validate() {
    std::vector<std::string> expanded;
    for (const auto &name : checks) {
        if (name == "all") {
            expanded.insert(expanded.end(), known_checks().begin(), known_checks().end());
        } else if (std::find(known_checks().begin(), known_checks().end(), name) !=
                   known_checks().end()) {
            expanded.push_back(name);
        } else {
            throw ConfigError("unknown check '" + name + "'");
        }
    }
    std::sort(expanded.begin(), expanded.end());
    expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
    if (expanded.empty()) throw ConfigError("no checks selected");
    checks = std::move(expanded);
    if (ks.empty()) throw ConfigError("empty k selection");
    for (auto k : ks) {
        if (k < 1) throw ConfigError("k must be >= 1");
    }
    if (n < 1) throw ConfigError("n must be >= 1");
    if (conjecture_m < 2) throw ConfigError("conjecture_m must be >= 2");
    if (enumerate_r > 12) throw ConfigError("enumerate_r must be <= 12");
}

namespace {

// The first failing result, or pass.
template <class... F>
CheckResult first_failure(F &&...checks) {
    CheckResult out = CheckResult::pass();
    ((out.passed() ? (void)(out = checks()) : (void)0), ...);
    return out;
}

CheckResult wnum_cell(unsigned k, std::uint64_t n, unsigned identity_n, unsigned r_max) {
    auto r = wnum::check_w_identities(k, identity_n);
    if (!r.passed()) return r;
    for (std::uint64_t m = 1; m <= n; ++m) {
        const auto x = wnum::encode(k, m);
        if (!wnum::is_valid(k, x)) return CheckResult::fail(m, "encode(" + std::to_string(m) + ") is not valid");
        if (wnum::decode(k, x) != m) return CheckResult::fail(m, "decode(encode(" + std::to_string(m) + ")) differs");
    }
    for (unsigned len = 1; len <= r_max; ++len) {
        const auto rep = wnum::enumerate_valid_serial(k, len);
        const auto span = wnum::w_value(k, len + 1) - wnum::w_value(k, len);
        if (wnum::count_valid(k, len) != span || rep.valid != span || rep.distinct != rep.valid ||
            rep.out_of_range != 0) {
            return CheckResult::fail(len, "expansions of length " + std::to_string(len) +
                                              " do not cover [W(r), W(r+1)) exactly once");
        }
    }
    return CheckResult::pass();
}

CheckResult value12_cell(unsigned k, std::uint64_t n) {
    const Word t = folding::tau_stream(k).prefix(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto v = wnum::t_via_numeration(k, i);
        if (v != t[i]) {
            return CheckResult::fail(i, "t(" + std::to_string(i) + ") = " + std::to_string(t[i]) +
                                            ", numeration gives " + std::to_string(v));
        }
    }
    return CheckResult::pass();
}

CheckResult construction_cell(unsigned k) {
    for (unsigned l = 1; l <= 4; ++l) {
        for (unsigned r = 1; r <= 4; ++r) {
            auto res = wnum::check_construction(k, l, r, 8);
            if (!res.passed()) return res;
        }
    }
    return CheckResult::pass();
}

CheckResult kernel_cell(unsigned k, std::uint64_t n, std::uint64_t distinct_n, unsigned depth,
                        unsigned c_max) {
    auto r = wnum::check_kernel_distinct(k, c_max, distinct_n);
    if (!r.passed()) return r;
    std::size_t prev = 0;
    for (unsigned a = 0; a <= depth; ++a) {
        const auto count = wnum::kernel_evidence_serial(k, a, n);
        if (a > 0 && count <= prev) {
            return CheckResult::fail(a, "kernel evidence " + std::to_string(count) +
                                            " at max_a=" + std::to_string(a) + " does not grow");
        }
        prev = count;
    }
    return CheckResult::pass();
}

sturmian::SlopeSpec slope_from(const std::string &text) {
    const auto semi = text.find(';');
    const auto alpha = sturmian::QuadSurd::parse(text.substr(0, semi));
    if (semi == std::string::npos) return sturmian::find_intercept(alpha);
    sturmian::SlopeSpec spec{alpha, sturmian::QuadSurd::parse(text.substr(semi + 1))};
    spec.validate();
    return spec;
}

CheckResult sturmian_cell(const std::string &slope, std::uint64_t n, unsigned n_max) {
    const auto spec = slope_from(slope);
    const auto stream = sturmian::mechanical_stream(spec);
    return first_failure([&] { return sturmian::check_star_parity(stream, n); },
                         [&] { return sturmian::check_theorem_D(stream, n, n_max); });
}

} // namespace

std::vector<Cell> plan(const SuiteConfig &config) {
    std::vector<Cell> cells;
    const std::uint64_t n = config.n;
    auto per_k = [&](const std::string &check, unsigned min_k, auto make) {
        for (unsigned k : config.ks) {
            if (k < min_k) continue;
            cells.push_back({check, json{{"k", k}, {"n", n}}, make(k)});
        }
    };

    for (const auto &check : config.checks) {
        if (check == "thm-a") {
            cells.push_back({check, json{{"n", n}}, [n] { return folding::check_theorem_A(n); }});
        } else if (check == "thm-b") {
            per_k(check, 2, [n](unsigned k) { return [=] { return folding::check_theorem_B(k, n); }; });
        } else if (check == "gpd") {
            per_k(check, 1, [n](unsigned k) { return [=] { return folding::check_gpd(k, n); }; });
        } else if (check == "projection") {
            per_k(check, 1, [n](unsigned k) { return [=] { return folding::check_projection(k, n); }; });
        } else if (check == "mu") {
            per_k(check, 1, [n](unsigned k) {
                return [=] {
                    return first_failure([&] { return folding::check_gamma_identity(k, 8, 3); },
                                         [&] { return folding::check_lemma_mu(k, n); });
                };
            });
        } else if (check == "alpha") {
            per_k(check, 1, [n](unsigned k) { return [=] { return folding::check_lemma_alpha(k, n); }; });
        } else if (check == "stars") {
            per_k(check, 1, [n](unsigned k) {
                return [=] {
                    return first_failure(
                        [&] { return folding::check_star_positions(k, n); },
                        [&] {
                            return k >= 2 ? folding::check_sumset_residue(k, 1000) : CheckResult::pass();
                        });
                };
            });
        } else if (check == "complement") {
            per_k(check, 1, [n](unsigned k) { return [=] { return folding::check_complement(k, n); }; });
        } else if (check == "membership") {
            per_k(check, 1, [n](unsigned k) {
                return [=] { return folding::check_membership_property(k, n); };
            });
        } else if (check == "wnum") {
            const unsigned idn = config.identity_n, r = config.enumerate_r;
            per_k(check, 1, [=](unsigned k) { return [=] { return wnum_cell(k, n, idn, r); }; });
        } else if (check == "value12") {
            per_k(check, 1, [n](unsigned k) { return [=] { return value12_cell(k, n); }; });
        } else if (check == "construction") {
            for (unsigned k : config.ks) {
                cells.push_back({check, json{{"k", k}, {"l_max", 4}, {"n", 8}, {"r_max", 4}},
                                 [k] { return construction_cell(k); }});
            }
        } else if (check == "kernel") {
            for (unsigned k : config.ks) {
                const unsigned depth = config.kernel_depth, c_max = config.kernel_c;
                const std::uint64_t distinct_n = config.kernel_n;
                cells.push_back({check,
                                 json{{"k", k}, {"n", n}, {"distinct_n", distinct_n}, {"max_a", depth},
                                      {"c_max", c_max}},
                                 [=] { return kernel_cell(k, n, distinct_n, depth, c_max); }});
            }
        } else if (check == "sturmian") {
            for (const auto &slope : config.slopes) {
                const unsigned n_max = config.sturmian_n_max;
                cells.push_back({check, json{{"slope", slope}, {"n", n}, {"n_max", n_max}},
                                 [=] { return sturmian_cell(slope, n, n_max); }});
            }
        } else if (check == "conjecture") {
            for (unsigned k : config.ks) {
                const std::size_t m = config.conjecture_m;
                cells.push_back({check, json{{"k", k}, {"m", m}},
                                 [=] { return complexity::check_conjecture(k, m).result(); }});
            }
        }
    }
    return cells;
}

std::vector<CheckReport> run_suite(const SuiteConfig &config) {
    const auto cells = plan(config);
    std::vector<CheckReport> reports(cells.size());
    const int threads = config.jobs > 0 ? static_cast<int>(config.jobs) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
        const auto &cell = cells[static_cast<std::size_t>(i)];
        auto &rep = reports[static_cast<std::size_t>(i)];
        rep.check = cell.check;
        rep.params = cell.params;
        rep.artifact_version = std::string(artifact_version());
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto r = cell.run();
            rep.status = r.status;
            rep.fail_index = r.fail_index;
            rep.detail = r.detail;
        } catch (const std::exception &e) {
            rep.status = Status::Error;
            rep.detail = e.what();
        }
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport &a, const CheckReport &b) {
        if (a.check != b.check) return a.check < b.check;
        return a.params.dump() < b.params.dump();
    });
    return reports;
}

int exit_code(const std::vector<CheckReport> &reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport &r) { return r.status == Status::Pass; })
               ? 0
               : 1;
}

void write_jsonl(std::ostream &os, const std::vector<CheckReport> &reports) {
    for (const auto &r : reports) os << r.to_json().dump() << '\n';
}

void write_table(std::ostream &os, const std::vector<CheckReport> &reports) {
    for (const auto &r : reports) {
        os << std::left << std::setw(13) << r.check << std::setw(9) << to_string(r.status)
           << std::setw(8) << (std::to_string(r.elapsed_ms) + "ms") << r.params.dump();
        if (!r.detail.empty()) os << "  " << r.detail;
        os << '\n';
    }
}

} // namespace sfs::suite
