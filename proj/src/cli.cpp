#include "propp/cli.hpp"

#include "propp/almost_prime_counter.hpp"
#include "propp/analytic_constants.hpp"
#include "propp/bound_suite.hpp"
#include "propp/constructor.hpp"
#include "propp/count_s.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"
#include "propp/prime_engine.hpp"
#include "propp/sequence_io.hpp"
#include "propp/special_functions.hpp"
#include "propp/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace propp::cli {

using nlohmann::json;

namespace {

// Integers above 2^53 travel as decimal strings.
json integer(u128 v)
{
    if (v <= kJsonExactMax)
        return static_cast<std::uint64_t>(v);
    return to_string(v);
}

json real(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

json optional_real(const std::optional<double>& v)
{
    return v ? real(*v) : json(nullptr);
}

std::string fmt_real(double v)
{
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

struct Split {
    std::string mantissa_digits; // digits with the decimal point removed
    long long exponent = 0;      // power of ten applied to the digits
};

Split split_number(std::string_view text)
{
    if (text.empty())
        throw FormatError("empty number");
    Split s;
    std::size_t i = 0;
    bool seen_point = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        const char c = text[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            s.mantissa_digits.push_back(c);
            if (seen_point)
                --s.exponent;
        } else {
            throw FormatError("invalid number '" + std::string(text) + "'");
        }
    }
    if (s.mantissa_digits.empty())
        throw FormatError("invalid number '" + std::string(text) + "'");
    if (i < text.size()) {
        const std::string exp(text.substr(i + 1));
        std::size_t used = 0;
        long long e = 0;
        try {
            e = std::stoll(exp, &used);
        } catch (const std::exception&) {
            throw FormatError("invalid exponent in '" + std::string(text) + "'");
        }
        if (used != exp.size())
            throw FormatError("invalid exponent in '" + std::string(text) + "'");
        s.exponent += e;
    }
    return s;
}

struct Output {
    std::ostream* stream;
    std::ofstream file;

    explicit Output(std::ostream& fallback, const std::string& path) : stream(&fallback)
    {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw Error("cannot open output file '" + path + "'");
            stream = &file;
        }
    }
    std::ostream& operator*() { return *stream; }
};

void emit_json(std::ostream& os, json j)
{
    j["schema_version"] = kSchemaVersion;
    os << j.dump() << '\n';
}

std::uint64_t default_plimit()
{
    if (const char* env = std::getenv("PROPP_PLIMIT")) {
        const u128 v = parse_integer(env);
        if (v > ~std::uint64_t{0})
            throw DomainError("PROPP_PLIMIT is out of range");
        return static_cast<std::uint64_t>(v);
    }
    return kConstantsPrimeLimit;
}

std::uint64_t to_u64(u128 v, const char* what)
{
    if (v > ~std::uint64_t{0})
        throw DomainError(std::string(what) + " exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

json element_json(const SetElement& e)
{
    json factors = json::array();
    for (auto p : e.nu_factors)
        factors.push_back(p);
    return {{"value", integer(e.value)}, {"set_index", e.set_index}, {"nu_factors", factors}};
}

json verdict_json(const Verdict& v)
{
    json j{{"holds", v.holds}, {"length", v.length}, {"triples_checked", integer(v.triples_checked)}};
    if (v.witness) {
        j["witness"] = {integer((*v.witness)[0]), integer((*v.witness)[1]), integer((*v.witness)[2])};
        j["witness_index"] = {(*v.witness_index)[0], (*v.witness_index)[1], (*v.witness_index)[2]};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json check_json(const BoundCheck& c)
{
    json j{{"name", c.name}, {"relation", c.relation}, {"value", real(c.value)}, {"bound", real(c.bound)},
           {"pass", c.pass}};
    if (c.relation == "in")
        j["bound_hi"] = real(c.bound_hi);
    return j;
}

void print_checks_plain(std::ostream& os, const std::vector<BoundCheck>& checks)
{
    for (const auto& c : checks) {
        os << (c.pass ? "pass  " : "FAIL  ") << std::left << std::setw(44) << c.name << ' ' << fmt_real(c.value) << ' '
           << c.relation << ' ' << fmt_real(c.bound);
        if (c.relation == "in")
            os << " .. " << fmt_real(c.bound_hi);
        os << '\n';
    }
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const u128 v = parse_integer(item);
        if (v > static_cast<u128>(std::numeric_limits<T>::max()))
            throw DomainError(std::string(what) + " entry '" + item + "' is out of range");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

std::string csv_cell(const std::optional<double>& v)
{
    return v ? fmt_real(*v) : std::string();
}

} // namespace

u128 parse_integer(std::string_view text)
{
    const auto s = split_number(text);
    std::string digits = s.mantissa_digits;
    long long exponent = s.exponent;
    // Trailing zeros can pay for negative exponents.
    while (exponent < 0 && digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
        ++exponent;
    }
    if (exponent < 0) {
        if (digits.find_first_not_of('0') == std::string::npos)
            return 0;
        throw FormatError("'" + std::string(text) + "' is not an integer");
    }
    u128 v = parse_u128(digits);
    for (long long e = 0; e < exponent; ++e)
        v = checked_mul(v, 10);
    return v;
}

LogScale parse_log_scale(std::string_view text)
{
    const auto s = split_number(text);
    const auto first = s.mantissa_digits.find_first_not_of('0');
    if (first == std::string::npos)
        throw DomainError("value must be positive");
    // Keep 17 significant digits of the mantissa.
    const std::string head = s.mantissa_digits.substr(first, 17);
    const long long shift = static_cast<long long>(s.mantissa_digits.size() - first - head.size());
    const double mant = std::stod(head);
    return LogScale::from_ln(std::log(mant) + static_cast<double>(s.exponent + shift) * std::numbers::ln10);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Property-P set construction, verification and counting"};
    app.name("propp");
    app.require_subcommand(1, 1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads (results do not depend on this)")->check(CLI::PositiveNumber);

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "Primes up to a limit; class-3 primes in CSV mode");
    std::string sieve_limit;
    std::string sieve_emit = "json";
    sieve_cmd->add_option("--limit", sieve_limit, "Sieve bound")->required();
    sieve_cmd->add_option("--emit", sieve_emit)->check(CLI::IsMember({"json", "csv"}));

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Elements of S_i or of the union S up to a limit");
    std::size_t set_index = 0;
    bool construct_all = false;
    bool exclude_qi = false;
    std::string construct_limit;
    std::string construct_emit = "plain";
    std::string construct_out;
    auto* idx_opt = construct_cmd->add_option("--set-index", set_index, "Index i of S_i")->check(CLI::PositiveNumber);
    auto* all_flag = construct_cmd->add_flag("--all", construct_all, "Union over all i");
    idx_opt->excludes(all_flag);
    construct_cmd->add_option("--limit", construct_limit, "Upper bound on element values")->required();
    construct_cmd->add_flag("--exclude-qi", exclude_qi, "Forbid q_i as a factor of nu");
    construct_cmd->add_option("--emit", construct_emit)->check(CLI::IsMember({"plain", "json"}));
    construct_cmd->add_option("--out", construct_out, "Write to this file instead of stdout");

    // baseline
    auto* baseline_cmd = app.add_subcommand("baseline", "The q_i^2 set or the block x - floor(x/3) .. x");
    std::string baseline_kind;
    std::string baseline_limit;
    std::string baseline_x;
    std::string baseline_emit = "plain";
    std::string baseline_out;
    baseline_cmd->add_option("--kind", baseline_kind)->required()->check(CLI::IsMember({"squares", "block"}));
    baseline_cmd->add_option("--limit", baseline_limit, "Bound for --kind squares");
    baseline_cmd->add_option("--x", baseline_x, "Top of the block for --kind block");
    baseline_cmd->add_option("--emit", baseline_emit)->check(CLI::IsMember({"plain", "json"}));
    baseline_cmd->add_option("--out", baseline_out);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Decide Property P for a sequence file");
    std::string verify_input;
    bool verify_force = false;
    std::string verify_emit = "json";
    verify_cmd->add_option("--input", verify_input, "Sequence file")->required();
    verify_cmd->add_flag("--force", verify_force, "Ignore the triple-count cap");
    verify_cmd->add_option("--emit", verify_emit)->check(CLI::IsMember({"json", "plain"}));

    // lemma1
    auto* lemma_cmd = app.add_subcommand("lemma1", "Classify (n1, n2, n3) against the divisibility lemma");
    std::vector<std::string> lemma_args;
    lemma_cmd->add_option("n", lemma_args, "n1 n2 n3")->required()->expected(3);

    // pik
    auto* pik_cmd = app.add_subcommand("pik", "Exact pi_k(x; 4, 3) and its asymptotic formulas");
    std::string pik_x;
    unsigned pik_k = 0;
    std::string pik_mode = "all";
    pik_cmd->add_option("--x", pik_x)->required();
    pik_cmd->add_option("--k", pik_k)->required()->check(CLI::PositiveNumber);
    pik_cmd->add_option("--mode", pik_mode)->check(CLI::IsMember({"exact", "main", "full", "all"}));

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "CountReports over an x grid and a k set");
    std::string compare_grid;
    std::string compare_ks;
    std::string compare_emit = "csv";
    compare_cmd->add_option("--x-grid", compare_grid, "Comma-separated x values")->required();
    compare_cmd->add_option("--k-set", compare_ks, "Comma-separated k values")->required();
    compare_cmd->add_option("--emit", compare_emit)->check(CLI::IsMember({"csv", "json"}));

    // count-s
    auto* count_cmd = app.add_subcommand("count-s", "|S_i| per index, total S(x), envelope and baseline");
    std::string count_limit;
    std::string count_emit = "json";
    count_cmd->add_option("--limit", count_limit)->required();
    count_cmd->add_option("--emit", count_emit)->check(CLI::IsMember({"json", "plain"}));

    // constants / bounds
    std::string plimit_text;
    std::string h_plimit_text;
    std::string const_emit = "json";
    auto* constants_cmd = app.add_subcommand("constants", "Truncated constants and their published bounds");
    auto* bounds_cmd = app.add_subcommand("bounds", "Run the inequality suite; nonzero exit on any failure");
    for (auto* cmd : {constants_cmd, bounds_cmd}) {
        cmd->add_option("--plimit", plimit_text, "Prime truncation for the constants (default 1e8 or $PROPP_PLIMIT)");
        cmd->add_option("--h-plimit", h_plimit_text, "Prime truncation for the h family");
        cmd->add_option("--emit", const_emit)->check(CLI::IsMember({"json", "plain"}));
    }

    // envelope
    auto* envelope_cmd = app.add_subcommand("envelope", "sqrt(x) / (sqrt(ln x) (ln ln x)^2 (ln ln ln x)^2)");
    std::string envelope_x;
    envelope_cmd->add_option("--x", envelope_x, "Any positive real, e.g. 1e3000")->required();

    // theorem-terms
    auto* terms_cmd = app.add_subcommand("theorem-terms", "F1, F2 and the 1/e bracket for S_{k+j}(x)");
    std::string terms_x;
    double terms_t = 0.0;
    long long terms_j = 0;
    auto* tx = terms_cmd->add_option("--x", terms_x, "x, e.g. 1e5000");
    auto* tt = terms_cmd->add_option("--t", terms_t, "Alternatively ln ln sqrt(x) / 2");
    tx->excludes(tt);
    terms_cmd->add_option("--j", terms_j)->required();

    try {
        std::vector<const char*> argv{"propp"};
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    set_thread_count(threads);
    try {
        if (*sieve_cmd) {
            const auto limit = to_u64(parse_integer(sieve_limit), "--limit");
            const auto table = sieve(limit);
            if (sieve_emit == "csv") {
                for (auto p : table.class3())
                    out << p << '\n';
            } else {
                json j{{"limit", integer(limit)},
                       {"prime_count", table.primes().size()},
                       {"class3_count", table.class3().size()},
                       {"class3", table.class3()}};
                emit_json(out, j);
            }
            return kExitOk;
        }

        if (*construct_cmd) {
            if (set_index == 0 && !construct_all)
                throw DomainError("construct needs --set-index i or --all");
            ConstructOptions opt;
            opt.exclude_qi = exclude_qi;
            const u128 limit = parse_integer(construct_limit);
            const auto elements = construct_all ? enumerate_S(limit, opt) : enumerate_S_i(set_index, limit, opt);
            Output o(out, construct_out);
            if (construct_emit == "json") {
                json arr = json::array();
                for (const auto& e : elements)
                    arr.push_back(element_json(e));
                json j{{"limit", integer(limit)},
                       {"exclude_qi", exclude_qi},
                       {"count", elements.size()},
                       {"elements", arr}};
                if (!construct_all)
                    j["set_index"] = set_index;
                emit_json(*o, j);
            } else {
                std::vector<u128> values;
                for (const auto& e : elements)
                    values.push_back(e.value);
                write_sequence(*o, values);
            }
            return kExitOk;
        }

        if (*baseline_cmd) {
            std::vector<u128> values;
            json j{{"kind", baseline_kind}};
            if (baseline_kind == "squares") {
                if (baseline_limit.empty())
                    throw DomainError("baseline --kind squares needs --limit");
                const u128 limit = parse_integer(baseline_limit);
                values = baseline_squares(limit);
                j["limit"] = integer(limit);
            } else {
                if (baseline_x.empty())
                    throw DomainError("baseline --kind block needs --x");
                const auto x = to_u64(parse_integer(baseline_x), "--x");
                values = finite_block(x);
                j["x"] = integer(x);
            }
            Output o(out, baseline_out);
            if (baseline_emit == "json") {
                json arr = json::array();
                for (auto v : values)
                    arr.push_back(integer(v));
                j["count"] = values.size();
                j["elements"] = arr;
                emit_json(*o, j);
            } else {
                write_sequence(*o, values);
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            std::ifstream in(verify_input);
            if (!in)
                throw Error("cannot open sequence file '" + verify_input + "'");
            const auto seq = read_sequence(in);
            VerifyOptions vopt;
            vopt.force = verify_force;
            const auto v = check_property_p(seq, vopt);
            if (verify_emit == "plain") {
                if (v.holds)
                    out << "holds (" << to_string(v.triples_checked) << " triples)\n";
                else
                    out << "witness " << to_string((*v.witness)[0]) << ' ' << to_string((*v.witness)[1]) << ' '
                        << to_string((*v.witness)[2]) << '\n';
            } else {
                json j = verdict_json(v);
                j["input"] = verify_input;
                emit_json(out, j);
            }
            return v.holds ? kExitOk : kExitViolation;
        }

        if (*lemma_cmd) {
            std::uint64_t n[3];
            for (int t = 0; t < 3; ++t)
                n[t] = to_u64(parse_integer(lemma_args[t]), "lemma1 argument");
            const auto r = check_lemma1(n[0], n[1], n[2]);
            json j{{"n1", integer(n[0])},
                   {"n2", integer(n[1])},
                   {"n3", integer(n[2])},
                   {"classification", to_string(r.outcome)},
                   {"prime", r.prime ? json(*r.prime) : json(nullptr)}};
            emit_json(out, j);
            return r.outcome == Lemma1Outcome::applicable_violated ? kExitViolation : kExitOk;
        }

        if (*pik_cmd) {
            const auto x = to_u64(parse_integer(pik_x), "--x");
            const double xd = static_cast<double>(x);
            json j{{"x", integer(x)}, {"k", pik_k}, {"mode", pik_mode}};
            json prov{{"feasibility_guard", integer(kMaxExactX)}};
            std::optional<std::uint64_t> exact;
            if (pik_mode == "exact" || pik_mode == "all") {
                exact = pi_k_exact(x, pik_k);
                j["exact"] = integer(*exact);
            }
            if (pik_mode != "exact") {
                j["landau"] = real(landau_term(xd, pik_k));
                const auto b = meng_breakdown(xd, pik_k, pik_mode == "main" ? MengMode::main : MengMode::full);
                j["meng_main"] = real(b.main);
                if (pik_mode != "main") {
                    j["meng_full"] = real(b.value);
                    j["dropped_term_scale"] = real(b.dropped_scale);
                    prov["c34_truncation"] = kConstantsPrimeLimit;
                    prov["h_truncation"] = kHPrimeLimit;
                }
                if (exact)
                    j["ratio_exact_to_main"] = real(static_cast<double>(*exact) / b.main);
                prov["uniformity_A"] = MengParams{}.uniformity;
            }
            j["provenance"] = prov;
            emit_json(out, j);
            return kExitOk;
        }

        if (*compare_cmd) {
            const auto grid = parse_list<std::uint64_t>(compare_grid, "--x-grid");
            const auto ks = parse_list<unsigned>(compare_ks, "--k-set");
            const auto reports = compare(grid, ks);
            if (compare_emit == "csv") {
                out << "x,k,exact,landau,meng_main,meng_full,ratio\n";
                for (const auto& r : reports)
                    out << r.x << ',' << r.k << ',' << r.exact << ',' << fmt_real(r.landau) << ','
                        << csv_cell(r.meng_main) << ',' << csv_cell(r.meng_full) << ',' << csv_cell(r.ratio) << '\n';
            } else {
                json arr = json::array();
                for (const auto& r : reports)
                    arr.push_back({{"x", integer(r.x)},
                                   {"k", r.k},
                                   {"exact", integer(r.exact)},
                                   {"landau", real(r.landau)},
                                   {"meng_main", optional_real(r.meng_main)},
                                   {"meng_full", optional_real(r.meng_full)},
                                   {"ratio", optional_real(r.ratio)},
                                   {"dropped_term_scale", optional_real(r.dropped_scale)}});
                emit_json(out, {{"reports", arr},
                                {"provenance",
                                 {{"c34_truncation", kConstantsPrimeLimit}, {"h_truncation", kHPrimeLimit}}}});
            }
            return kExitOk;
        }

        if (*count_cmd) {
            const u128 limit = parse_integer(count_limit);
            const auto r = count_s(limit);
            if (count_emit == "plain") {
                out << "i,count\n";
                for (auto [i, c] : r.per_index)
                    out << i << ',' << c << '\n';
                out << "total," << r.total << "\nbaseline," << r.baseline_count << '\n';
            } else {
                json per = json::array();
                for (auto [i, c] : r.per_index)
                    per.push_back({{"i", i}, {"count", integer(c)}});
                emit_json(out, {{"limit", integer(limit)},
                                {"per_index", per},
                                {"total", integer(r.total)},
                                {"envelope", optional_real(r.envelope)},
                                {"baseline_count", integer(r.baseline_count)},
                                {"baseline_asymptotic", real(r.baseline_asymptotic)},
                                {"provenance", {{"max_set_index", r.per_index.size()}}}});
            }
            return kExitOk;
        }

        if (*constants_cmd || *bounds_cmd) {
            BoundSuiteConfig config;
            config.constants_limit =
                plimit_text.empty() ? default_plimit() : to_u64(parse_integer(plimit_text), "--plimit");
            if (!h_plimit_text.empty())
                config.h_limit = to_u64(parse_integer(h_plimit_text), "--h-plimit");
            const auto checks = run_bound_suite(config);
            bool ok = true;
            for (const auto& c : checks)
                ok = ok && c.pass;

            if (const_emit == "plain") {
                print_checks_plain(out, checks);
                out << (ok ? "all checks pass\n" : "some checks FAILED\n");
            } else {
                json arr = json::array();
                for (const auto& c : checks)
                    arr.push_back(check_json(c));
                json j{{"plimit", config.constants_limit},
                       {"h_plimit", config.h_limit},
                       {"checks", arr},
                       {"all_pass", ok}};
                if (*constants_cmd) {
                    auto est = [](const ConstantEstimate& e) {
                        return json{{"value", real(e.value)}, {"truncation", e.truncation}, {"error_note", e.error_note}};
                    };
                    const auto sq = lambda_p2_sum(10'000);
                    const double third = 1.0 / 3.0;
                    const auto g = gamma_triple(third);
                    json sqj = est(sq.estimate);
                    sqj["upper_bound"] = real(sq.upper_bound);
                    j["constants"] = {
                        {"euler_gamma", kEulerGamma},
                        {"M34", est(mertens_M34(config.constants_limit))},
                        {"C34", est(c34(config.constants_limit))},
                        {"lambda_p2_sum", sqj},
                        {"gamma_at_7_6", {{"gamma", g.gamma}, {"gamma1", g.gamma1}, {"gamma2", g.gamma2}}},
                        {"prime_log_sum_at_1_3", real(prime_log_sum(third, config.constants_limit))},
                        {"euler_product_at_1_3", real(euler_product(third, config.h_limit))},
                        {"h_at_1_3", real(h_eval(third, config.h_limit))},
                        {"f_at_1_3", real(f_factor(third, config.h_limit))},
                        {"h_second_at_1_3", real(h_second(third, config.h_limit, DerivativeMethod::analytic))},
                        {"corollary_constant_at_1_3",
                         real(corollary_constant(third, config.constants_limit, config.h_limit))},
                    };
                }
                emit_json(out, j);
            }
            if (*bounds_cmd)
                return ok ? kExitOk : kExitViolation;
            return kExitOk;
        }

        if (*envelope_cmd) {
            const auto x = parse_log_scale(envelope_x);
            const double log_value = log_envelope(x);
            emit_json(out, {{"x", envelope_x},
                            {"ln_x", x.ln_x},
                            {"envelope", real(std::exp(log_value))},
                            {"log_envelope", log_value}});
            return kExitOk;
        }

        if (*terms_cmd) {
            if (terms_x.empty() && tt->count() == 0)
                throw DomainError("theorem-terms needs --x or --t");
            const LogScale x = terms_x.empty() ? LogScale::from_half_loglog_sqrt(terms_t) : parse_log_scale(terms_x);
            const auto w = contribution_window(x);
            const auto t = theorem_terms(x, terms_j);
            emit_json(out, {{"ln_x", x.ln_x},
                            {"k", t.k},
                            {"j", t.j},
                            {"window", {w.lo, w.hi}},
                            {"log_f1", real(t.log_f1)},
                            {"log_f2", real(t.log_f2)},
                            {"log_f2_lower", real(t.log_f2_lower)},
                            {"bracket", real(t.bracket)},
                            {"bracket_at_least_inv_e", t.bracket >= 1.0 / std::numbers::e},
                            {"log_f1_reference", real(t.log_f1_reference)}});
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace propp::cli
