// jacklab: exact Jack symmetric functions, Littlewood-Richardson
// coefficients, and Dyson/Vandermonde coefficient tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource guard exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "jack/cache.hpp"
#include "jack/verify.hpp"

using namespace jack;

namespace {

struct Output {
    bool plain = false;
    void emit(const json& j) const {
        if (plain)
            std::cout << j.dump(1) << "\n";
        else
            std::cout << j.dump() << "\n";
    }
};

std::string ratfunc_plain(const RatFunc& f) { return f.str(); }

json expansion_json(const SymFun& f, const std::string& basis) {
    if (basis == "p") return symfun_to_json(f, "p");
    std::map<Partition, RatFunc> coeffs;
    auto deg = f.degree();
    if (!f.is_zero() && deg) {
        for (const auto& nu : partitions_of(int(*deg))) {
            RatFunc c = basis == "m" ? monomial_coeff(f, nu) : q_coeff(f, nu);
            if (!c.is_zero()) coeffs.emplace(nu, std::move(c));
        }
    }
    return coeff_map_to_json(coeffs, basis);
}

int cmd_expand(const std::string& lambda_str, const std::string& norm, const std::string& basis,
               const std::string& method, const std::string& cache_dir, const Output& out) {
    Partition la = parse_partition(lambda_str);
    ExpansionCache cache{cache_dir.empty() ? ExpansionCache::default_dir() : std::filesystem::path(cache_dir)};
    json j;
    if (method == "filtration") {
        if (la.empty()) throw CLI::ValidationError("--lambda", "filtration needs a nonzero shape");
        auto res = jack_q_filtration(la);
        SymFun f = res.raw * res.c_prime;
        if (norm == "P") f = f * jack_triple(la).norm_p;
        if (norm == "J") f = f * jack_triple(la).upper_norm;
        j = expansion_json(f, basis);
        j["method"] = "filtration";
        j["c_prime"] = to_json(res.c_prime);
        json rects = json::array();
        for (const auto& rc : res.rectangles) rects.push_back(to_json(rc));
        j["rectangles"] = rects;
    } else {
        SymFun f = cached_jack(cache, la, norm);
        j = expansion_json(f, basis);
        j["method"] = "gram_schmidt";
    }
    j["lambda"] = to_json(la);
    j["norm"] = norm;
    out.emit(j);
    return 0;
}

int cmd_lr(const std::string& mu_str, const std::string& nu_str, const std::string& lambda_str,
           const std::string& route, const Output& out) {
    Partition mu = parse_partition(mu_str), nu = parse_partition(nu_str),
              la = parse_partition(lambda_str);
    if (mu.weight() + nu.weight() != la.weight())
        throw CLI::ValidationError("--lambda", "weights of mu and nu must add up to lambda");
    RatFunc value;
    bool agree = true;
    std::string route_used = route;
    if (route == "rect") {
        if (!is_rectangle(la)) throw CLI::ValidationError("--route", "lambda is not a rectangle");
        if (!contains(la, nu)) throw CLI::ValidationError("--nu", "nu not inside lambda");
        auto closed = rect_lr(la, nu);
        value = mu == closed.mu_bar ? closed.value : RatFunc();
        agree = value == lr_oracle(mu, nu, la);
        route_used = "rect_closed";
    } else if (route == "marked") {
        auto vm = value_multiplicities(la);
        bool marked = vm.size() == 1 || (vm.size() == 2 && vm[1].second == 1);
        if (!marked) throw CLI::ValidationError("--route", "lambda is not a marked rectangle");
        int r = la.part(1), s = la.length(), n = la.part(1) - la.part(s);
        value = marked_rect_lr(r, s, n, mu, nu);
        agree = value == lr_oracle(mu, nu, la);
        route_used = "marked_closed";
    } else {
        value = lr_oracle(mu, nu, la);
    }
    LRReport rep = make_lr_report(mu, nu, la, value, route_used);
    json j = to_json(rep);
    j["value_plain"] = ratfunc_plain(rep.value);
    if (route != "oracle") j["agrees_with_oracle"] = agree;
    out.emit(j);
    return agree ? 0 : 1;
}

int cmd_dyson(int s, int t, const std::string& beta_str, const std::string& named, int pattern_i,
              long guard, const Output& out) {
    json j{{"s", s}, {"t", t}};
    if (!named.empty()) {
        Rat closed;
        std::vector<int> beta;
        if (named == "general_i") {
            closed = closed_pattern_i(pattern_i, s, t);
            beta = pattern_i_exponents(pattern_i, s);
            j["i"] = pattern_i;
        } else if (named == "two_two") {
            closed = closed_minus2_plus2(s, t);
            beta = minus2_plus2_exponents(s);
        } else if (named == "one_one_two") {
            closed = closed_minus1_minus1_plus2(s, t);
            beta = minus1_minus1_plus2_exponents(s);
        } else {
            throw CLI::ValidationError("--named", "expected general_i, two_two or one_one_two");
        }
        Int expansion = delta_coefficient(beta, s, t, guard);
        j["named"] = named;
        j["coefficient"] = expansion.get_str();
        j["closed_form"] = closed.get_str();
        j["agree"] = closed == Rat(expansion);
        out.emit(j);
        return 0;
    }
    std::vector<int> beta;
    {
        std::istringstream in(beta_str);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) beta.push_back(std::stoi(tok));
    }
    if (int(beta.size()) != s) throw CLI::ValidationError("--beta", "needs exactly s entries");
    Int c = delta_coefficient(beta, s, t, guard);
    j["beta"] = beta;
    j["coefficient"] = c.get_str();
    out.emit(j);
    return 0;
}

int cmd_filtration(const std::string& lambda_str, const Output& out) {
    Partition la = parse_partition(lambda_str);
    auto iter = rect_filtration(la);
    auto closed = filtration_closed_form(la);
    json rects = json::array();
    for (const auto& rc : iter) rects.push_back(to_json(rc));
    json j{{"lambda", to_json(la)},
           {"rectangles", rects},
           {"closed_form_agrees", iter == closed}};
    out.emit(j);
    return iter == closed ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_weight, const std::string& nu_str,
               const std::string& t_values, int t_single, int s, int cutoff,
               const std::string& cache_dir, const Output& out) {
    std::vector<int> ts;
    if (t_single > 0) {
        for (int t = 1; t <= t_single; ++t) ts.push_back(t);
    } else {
        std::istringstream in(t_values);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) ts.push_back(std::stoi(tok));
    }
    if (ts.empty()) ts = {1, 2};
    int t_max = *std::max_element(ts.begin(), ts.end());

    std::vector<SuiteResult> results;
    if (suite == "dyson") {
        results.push_back(check_dyson_constants(s, t_max));
        results.push_back(check_named_coefficients({3, 4, 5}, ts, false));
        results.push_back(check_two_route(std::min(s, 4), std::min(t_max, 2)));
    } else if (suite == "pieri") {
        results.push_back(check_jack_core(max_weight));
        results.push_back(check_pieri(max_weight));
    } else if (suite == "rect_lr") {
        results.push_back(check_rect_lr(max_weight));
    } else if (suite == "marked_lr") {
        results.push_back(check_marked_lr(max_weight));
    } else if (suite == "filtration") {
        results.push_back(check_filtration(max_weight));
    } else if (suite == "frobenius") {
        results.push_back(check_frobenius(6, std::min(t_max, 2), std::min(max_weight, 6)));
    } else if (suite == "positivity") {
        Partition nu = nu_str.empty() ? Partition({2, 1}) : parse_partition(nu_str);
        bool assert_nonneg = nu == Partition({2, 1}) || nu.length() <= 1;
        results.push_back(check_positivity(nu, max_weight, assert_nonneg));
        // persistent per-triple store, resumable: existing documents are kept
        ExpansionCache store{cache_dir.empty() ? ExpansionCache::default_dir()
                                               : std::filesystem::path(cache_dir)};
        std::string dirname = "positivity-nu-" + (nu.empty() ? "0" : nu.str());
        for (auto& ch : dirname)
            if (ch == ',') ch = '_';
        auto dir = store.dir() / "reports" / dirname;
        std::filesystem::create_directories(dir);
        for (const auto& rep : positivity_sweep(nu, max_weight)) {
            std::string name = "mu-" + (rep.mu.empty() ? "0" : rep.mu.str()) + "-la-" +
                               rep.lambda.str() + ".json";
            for (auto& ch : name)
                if (ch == ',') ch = '_';
            auto path = dir / name;
            if (std::filesystem::exists(path)) continue;
            json j = to_json(rep);
            if (!rep.is_polynomial || (!rep.value.is_zero() && !rep.is_nonneg_int))
                j["flag"] = "mismatch";
            auto tmp = path;
            tmp += ".tmp";
            {
                std::ofstream f(tmp);
                f << j.dump(1) << "\n";
            }
            std::filesystem::rename(tmp, path);
        }
    } else if (suite == "basis") {
        results.push_back(check_basis(std::min(max_weight, 6), max_weight, std::min(t_max, 2)));
        results.push_back(check_delta_rect_action(3, 3, std::min(t_max, 2)));
        results.push_back(check_kernel(3, std::min(t_max, 2), cutoff));
    } else {
        throw CLI::ValidationError("--suite", "unknown suite " + suite);
    }

    // persist per-case records and spot-check one cache entry per run
    ExpansionCache cache{cache_dir.empty() ? ExpansionCache::default_dir() : std::filesystem::path(cache_dir)};
    bool pass = true;
    json summary = json::array();
    for (const auto& r : results) {
        pass = pass && r.pass;
        summary.push_back(r.to_json());
        auto path = cache.dir() / "reports" / (r.name + ".json");
        std::filesystem::create_directories(path.parent_path());
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream f(tmp);
            f << r.to_json().dump(1) << "\n";
        }
        std::filesystem::rename(tmp, path);
    }
    auto entries = cache.entries();
    if (!entries.empty()) {
        std::mt19937 rng(std::random_device{}());
        auto [la, norm] = entries[rng() % entries.size()];
        auto cached = cache.load(la, norm);
        bool ok = cached && *cached == jack_by_norm(la, norm);
        json spot{{"lambda", to_json(la)}, {"norm", norm}, {"consistent", ok}};
        summary.push_back(json{{"suite", "cache_spot_check"}, {"pass", ok}, {"details", spot}});
        pass = pass && ok;
    }
    out.emit(json{{"pass", pass}, {"results", summary}});
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jack symmetric function laboratory"};
    app.require_subcommand(1);

    Output out;
    std::string cache_dir;
    bool plain = false, jsonf = false;
    app.add_flag("--plain", plain, "indented human-oriented output");
    app.add_flag("--json", jsonf, "compact JSON output (default)");
    app.add_option("--cache-dir", cache_dir, "cache directory override");

    auto* expand = app.add_subcommand("expand", "expand a Jack function");
    std::string lambda_str, norm = "P", basis = "p", method = "gram_schmidt";
    expand->add_option("--lambda", lambda_str, "partition, comma separated")->required();
    expand->add_option("--norm", norm, "P, Q or J")
        ->check(CLI::IsMember({"P", "Q", "J"}));
    expand->add_option("--basis", basis, "p, m or q")->check(CLI::IsMember({"p", "m", "q"}));
    expand->add_option("--method", method, "gram_schmidt or filtration")
        ->check(CLI::IsMember({"gram_schmidt", "filtration"}));

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    std::string mu_str, nu_str, route = "oracle";
    lr->add_option("--mu", mu_str, "partition")->required();
    lr->add_option("--nu", nu_str, "partition")->required();
    lr->add_option("--lambda", lambda_str, "partition")->required();
    lr->add_option("--route", route, "oracle, rect or marked")
        ->check(CLI::IsMember({"oracle", "rect", "marked"}));

    auto* dyson = app.add_subcommand("dyson", "Laurent coefficients of the operator product");
    int s = 2, t = 1, pattern_i = 1;
    long guard = delta_guard_default();
    std::string beta_str, named;
    dyson->add_option("--s", s, "number of variables")->required();
    dyson->add_option("--t", t, "integer exponent")->required();
    dyson->add_option("--beta", beta_str, "exponent vector, comma separated");
    dyson->add_option("--named", named, "general_i, two_two or one_one_two");
    dyson->add_option("--i", pattern_i, "depth for the general_i pattern");
    dyson->add_option("--guard", guard, "resource bound on s*t");

    auto* filt = app.add_subcommand("filtration", "rectangular filtration of a shape");
    filt->add_option("--lambda", lambda_str, "partition")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, t_values = "1,2";
    int max_weight = 8, cutoff = 6, verify_s = 4, verify_t = 0;
    verify->add_option("--suite", suite, "pieri, rect_lr, marked_lr, filtration, frobenius, "
                                         "positivity, basis or dyson")
        ->required();
    verify->add_option("--max-weight", max_weight, "weight bound");
    verify->add_option("--nu", nu_str, "fixed nu for the positivity sweep");
    verify->add_option("--t-values", t_values, "comma separated integer parameters");
    verify->add_option("--t", verify_t, "run parameters 1..t");
    verify->add_option("--s", verify_s, "variable count bound");
    verify->add_option("--cutoff", cutoff, "kernel expansion degree bound");

    try {
        app.parse(argc, argv);
        out.plain = plain;
        if (expand->parsed())
            return cmd_expand(lambda_str, norm, basis, method, cache_dir, out);
        if (lr->parsed()) return cmd_lr(mu_str, nu_str, lambda_str, route, out);
        if (dyson->parsed()) return cmd_dyson(s, t, beta_str, named, pattern_i, guard, out);
        if (filt->parsed()) return cmd_filtration(lambda_str, out);
        if (verify->parsed())
            return cmd_verify(suite, max_weight, nu_str, t_values, verify_t, verify_s, cutoff,
                              cache_dir, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
