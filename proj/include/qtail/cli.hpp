#pragma once

// The qtail command line: compute, tail, head, series, check.
// Exit codes: 0 success, 1 failed check, 2 usage error, 3 computation error.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtail/braid.hpp"
#include "qtail/json.hpp"
#include "qtail/knot_table.hpp"
#include "qtail/qlaurent.hpp"
#include "qtail/series.hpp"
#include "qtail/skein.hpp"
#include "qtail/statesum.hpp"
#include "qtail/tails.hpp"
#include "qtail/torus.hpp"

#ifndef QTAIL_DATA_DIR
#define QTAIL_DATA_DIR "data"
#endif

namespace qtail::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kComputation = 3 };

/// Either a braid word or a torus pair (m, p).
struct KnotSpec {
    std::optional<BraidWord> braid;
    std::optional<std::pair<int, int>> torus;

    std::string describe() const {
        if (braid) return "braid " + format_braid(*braid);
        return "torus (" + std::to_string(torus->first) + "," + std::to_string(torus->second) + ")";
    }
};

inline const std::vector<std::string>& method_names() {
    static const std::vector<std::string> names{"statesum", "skein", "morton", "hikami", "psi", "walk25"};
    return names;
}

/// The source for `method` on `spec`, or MethodMismatch when the method does not cover it.
inline JonesSource make_source(const KnotSpec& spec, const std::string& method, int fixed_label = 0) {
    if (method == "statesum") {
        StateSumConfig cfg;
        cfg.fixed_label = fixed_label;
        return statesum_source(spec.braid ? *spec.braid : torus_braid(spec.torus->first, spec.torus->second), cfg);
    }
    auto mismatch = [&](const std::string& why) { return MethodMismatch(method + " " + why + ", got " + spec.describe()); };
    if (!spec.torus) throw mismatch("needs a torus spec");
    const auto [m, p] = *spec.torus;
    if (method == "skein") {
        if (m != 2) throw mismatch("covers (2,p) only");
        return skein_source(p);
    }
    if (method == "morton") {
        if (m != 2 || p % 2 == 0 || std::abs(p) < 3) throw mismatch("covers (2,p) with odd |p| >= 3 only");
        return morton_source(p);
    }
    if (method == "hikami") {
        if (m != 2 || p % 2 != 0) throw mismatch("covers (2,p) with even p only");
        return hikami_source(p);
    }
    if (method == "psi") {
        if (std::gcd(m, std::abs(p)) != 1) throw mismatch("covers torus knots only");
        return psi_source(m, p);
    }
    if (method == "walk25") {
        if (m != 2 || p != 5) throw mismatch("covers (2,5) only");
        return walk25_source();
    }
    throw mismatch("is not a method");
}

/// "q", "-q^4", "q^(3/2)", "-q^(-1/4)", "1", "-1".
inline SignedMonomial parse_signed_monomial(const std::string& text) {
    std::string s = text;
    int sign = 1;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        sign = s[0] == '-' ? -1 : 1;
        s.erase(0, 1);
    }
    if (s == "1") return SignedMonomial{sign, QExp{0}};
    if (s.empty() || s[0] != 'q') throw SyntaxError("expected a monomial like -q^4, got '" + text + "'");
    if (s == "q") return SignedMonomial{sign, QExp::whole(1)};
    if (s.size() < 3 || s[1] != '^') throw SyntaxError("expected a monomial like -q^4, got '" + text + "'");
    std::string e = s.substr(2);
    if (e.front() == '(') {
        if (e.back() != ')') throw SyntaxError("unbalanced parenthesis in '" + text + "'");
        e = e.substr(1, e.size() - 2);
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    try {
        std::size_t used = 0;
        const auto slash = e.find('/');
        num = std::stoll(e.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? e.size() : slash)) throw SyntaxError("");
        if (slash != std::string::npos) {
            den = std::stoll(e.substr(slash + 1), &used);
            if (used != e.size() - slash - 1) throw SyntaxError("");
        }
    } catch (const std::exception&) {
        throw SyntaxError("bad exponent in '" + text + "'");
    }
    if (den <= 0 || (4 * num) % den != 0) throw SyntaxError("exponent of '" + text + "' is not a multiple of 1/4");
    return SignedMonomial{sign, QExp{4 * num / den}};
}

namespace detail {

struct Comparison {
    bool pass = true;
    std::string where; // first differing exponent, rendered
    BigInt lhs, rhs;
};

inline Comparison compare(const QPoly& a, const QPoly& b) {
    const QPoly diff = a - b;
    if (diff.is_zero()) return {};
    const QExp e = diff.min_exp();
    return {false, "q^" + format_exponent(e), a.coeff(e), b.coeff(e)};
}

inline Comparison compare(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    return compare(a.poly().truncated(QExp::whole(order)), b.poly().truncated(QExp::whole(order)));
}

inline int report(std::ostream& out, const std::string& label, const Comparison& c, const std::string& lhs_name = "lhs",
                  const std::string& rhs_name = "rhs") {
    if (c.pass) {
        out << "PASS " << label << "\n";
        return kOk;
    }
    out << "FAIL " << label << ": first mismatch at " << c.where << ": " << lhs_name << " " << c.lhs << ", " << rhs_name
        << " " << c.rhs << "\n";
    return kCheckFailed;
}

inline QPoly substitute_q2(const QPoly& p) {
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (const auto& t : p.terms()) terms.emplace_back(2 * t.exp, t.coeff);
    return QPoly::from_terms(std::move(terms));
}

inline void print_report(std::ostream& out, const TailReport& r) {
    out << "status " << to_string(r.status) << "\n";
    out << "colors";
    for (int c : r.colors) out << " " << c;
    out << "\nagreement";
    for (int a : r.agreement) out << " " << a;
    out << "\nseries " << r.stabilized.to_string() << "\n";
}

struct Options {
    std::string braid;
    std::string knot;
    std::vector<int> torus;
    int color = 2;
    std::string method = "statesum";
    int label = 0;
    bool json = false;
    bool raw = false;
    int nmax = 6;
    int order = 0;
    int parity = 1;
    std::string name;
    std::string a, b;
    int k = 3;
    int p = 5;
    std::string form = "alternating";
};

inline KnotSpec resolve_spec(const Options& o) {
    KnotSpec spec;
    const int given = (o.braid.empty() ? 0 : 1) + (o.knot.empty() ? 0 : 1) + (o.torus.empty() ? 0 : 1);
    if (given != 1) throw SyntaxError("give exactly one of --braid, --knot, --torus");
    if (!o.braid.empty()) spec.braid = parse_braid(o.braid);
    if (!o.knot.empty()) {
        const char* dir = std::getenv("QTAIL_DATA");
        const auto table = load_knot_table(std::string(dir ? dir : QTAIL_DATA_DIR) + "/braids.txt");
        const auto it = std::find_if(table.begin(), table.end(), [&](const KnotEntry& e) { return e.name == o.knot; });
        if (it == table.end()) throw SyntaxError("unknown knot '" + o.knot + "'");
        spec.braid = it->braid;
    }
    if (!o.torus.empty()) {
        if (o.torus[0] < 2 || o.torus[1] == 0) throw RangeError("--torus needs m >= 2 and p != 0");
        spec.torus = {o.torus[0], o.torus[1]};
    }
    return spec;
}

inline int run_compute(const Options& o, std::ostream& out) {
    if (o.color < 1) throw RangeError("--color must be >= 1");
    const QPoly j = make_source(resolve_spec(o), o.method, o.label).evaluate(o.color);
    if (o.raw) {
        if (o.json) out << nlohmann::json(j).dump() << "\n";
        else out << j.to_string() << "\n";
        return kOk;
    }
    const CanonicalForm c = canonical(j);
    if (o.json) {
        out << nlohmann::json(c.normalized).dump() << "\n";
        return kOk;
    }
    out << "canonical " << c.normalized.to_string() << "\n";
    out << "sign " << c.sign << "\n";
    out << "shift " << format_exponent(c.shift) << "\n";
    return kOk;
}

inline int run_extract(const Options& o, Side side, std::ostream& out) {
    const JonesSource source = make_source(resolve_spec(o), o.method, o.label);
    const int order = o.order > 0 ? o.order : o.nmax;
    const std::vector<TailReport> reports = multi_extract(source, o.nmax, order, o.parity, side);
    if (o.json) {
        if (reports.size() == 1) out << nlohmann::json(reports[0]).dump() << "\n";
        else out << nlohmann::json(reports).dump() << "\n";
        return kOk;
    }
    if (reports.size() == 1) {
        print_report(out, reports[0]);
        return kOk;
    }
    out << "[odd N]\n";
    print_report(out, reports[0]);
    out << "[even N]\n";
    print_report(out, reports[1]);
    return kOk;
}

inline int run_series(const Options& o, std::ostream& out) {
    const int order = o.order > 0 ? o.order : 10;
    TruncatedSeries s;
    if (o.name == "euler") {
        s = euler_inf(order);
    } else if (o.name == "theta" || o.name == "theta-product" || o.name == "psi") {
        if (o.a.empty() || o.b.empty()) throw SyntaxError(o.name + " needs --a and --b");
        const SignedMonomial a = parse_signed_monomial(o.a);
        const SignedMonomial b = parse_signed_monomial(o.b);
        s = o.name == "theta" ? theta_f(a, b, order)
            : o.name == "psi" ? false_theta_psi(a, b, order)
                              : theta_f_product(a, b, order);
    } else if (o.name == "andrews-gordon") {
        s = andrews_gordon_rhs(o.k, order);
    } else if (o.name == "p200") {
        const P200Form f = o.form == "entry9" ? P200Form::entry9 : o.form == "p200" ? P200Form::p200 : P200Form::alternating;
        s = ramanujan_p200(f, order);
    } else {
        throw SyntaxError("unknown series '" + o.name + "'");
    }
    if (o.json) out << nlohmann::json(s).dump() << "\n";
    else out << s.to_string() << "\n";
    return kOk;
}

inline int check_andrews_gordon(const Options& o, int order, std::ostream& out) {
    const TruncatedSeries lhs = andrews_gordon_rhs(o.k, order);
    const TruncatedSeries rhs = theta_f(SignedMonomial::q(2 * o.k, -1), SignedMonomial::q(1, -1), order);
    return report(out, "andrews-gordon k=" + std::to_string(o.k) + " order=" + std::to_string(order), compare(lhs, rhs),
                  "multisum", "theta");
}

inline int check_p200(int order, std::ostream& out) {
    const TruncatedSeries alt = ramanujan_p200(P200Form::alternating, order);
    const TruncatedSeries e9 = ramanujan_p200(P200Form::entry9, order);
    const TruncatedSeries p200 = ramanujan_p200(P200Form::p200, order);
    const std::string label = "p200 order=" + std::to_string(order);
    if (const auto c = compare(alt, e9); !c.pass) return report(out, label, c, "alternating", "entry9");
    return report(out, label, compare(alt, p200), "alternating", "p200");
}

inline int check_jacobi(const Options& o, int order, std::ostream& out) {
    std::vector<std::pair<SignedMonomial, SignedMonomial>> pairs;
    if (!o.a.empty() || !o.b.empty()) {
        if (o.a.empty() || o.b.empty()) throw SyntaxError("jacobi needs both --a and --b");
        pairs.emplace_back(parse_signed_monomial(o.a), parse_signed_monomial(o.b));
    } else {
        for (auto [x, y] : {std::pair{2, 1}, {4, 1}, {6, 1}, {1, 3}})
            pairs.emplace_back(SignedMonomial::q(x, -1), SignedMonomial::q(y, -1));
    }
    int rc = kOk;
    for (const auto& [a, b] : pairs) {
        const std::string label = "jacobi f(" + a.to_string() + "," + b.to_string() + ") order=" + std::to_string(order);
        rc = std::max(rc, report(out, label, compare(theta_f(a, b, order), theta_f_product(a, b, order)), "sum", "product"));
    }
    return rc;
}

inline int check_crossmethod(const Options& o, std::ostream& out) {
    Options t = o;
    if (t.torus.empty()) t.torus = {2, -3};
    const KnotSpec spec = resolve_spec(t);
    const JonesSource reference = make_source(spec, "statesum");
    int rc = kOk;
    for (const auto& method : method_names()) {
        if (method == "statesum") continue;
        std::optional<JonesSource> other;
        try {
            other = make_source(spec, method);
        } catch (const MethodMismatch&) {
            continue;
        }
        Comparison first;
        int at = 0;
        for (int N = 1; N <= o.nmax && first.pass; ++N) {
            first = compare(canonical(other->evaluate(N)).normalized, canonical(reference.evaluate(N)).normalized);
            at = N;
        }
        const std::string label = "crossmethod " + method + " vs statesum " + spec.describe() + " N<=" +
                                  std::to_string(first.pass ? o.nmax : at);
        rc = std::max(rc, report(out, label, first, method, "statesum"));
    }
    return rc;
}

/// H^odd(q^2) - q^{p-2} H^even(q^2) = f(-q^2, -q^{p-2}) for the (4,p) torus knot.
inline int check_fourp(const Options& o, int order, std::ostream& out) {
    const int p = o.p;
    if (p < 3 || p % 2 == 0) throw RangeError("fourp needs odd p >= 3");
    const int half = (order + 1) / 2;
    const std::vector<TailReport> heads = multi_head_extract(psi_source(4, p), half + 2, half, 2);
    const std::string label = "fourp p=" + std::to_string(p) + " order=" + std::to_string(order);
    for (const auto& h : heads)
        if (h.status != TailStatus::stabilized || h.stabilized.order() < half) {
            out << "FAIL " << label << ": head did not stabilize to order " << half << "\n";
            return kCheckFailed;
        }
    const QPoly lhs = substitute_q2(heads[0].stabilized.poly()) - substitute_q2(heads[1].stabilized.poly()) * QPoly::q(p - 2);
    const TruncatedSeries rhs = theta_f(SignedMonomial::q(2, -1), SignedMonomial::q(p - 2, -1), order);
    return report(out, label, compare(TruncatedSeries(lhs, order), rhs), "heads", "theta");
}

inline int run_check(const Options& o, std::ostream& out) {
    const int order = o.order > 0 ? o.order : 30;
    if (o.name == "andrews-gordon") return check_andrews_gordon(o, order, out);
    if (o.name == "p200") return check_p200(order, out);
    if (o.name == "jacobi") return check_jacobi(o, order, out);
    if (o.name == "crossmethod") return check_crossmethod(o, out);
    if (o.name == "fourp") return check_fourp(o, order, out);
    throw SyntaxError("unknown check '" + o.name + "'");
}

} // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Colored Jones polynomials, their heads and tails, and q-series identities", "qtail"};
    app.require_subcommand(1);

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--braid", o.braid, "braid word, e.g. \"3: 1 -2 1 -2\"");
        sub->add_option("--knot", o.knot, "name from the bundled braid table");
        sub->add_option("--torus", o.torus, "torus pair m p")->expected(2);
        sub->add_option("--method", o.method, "evaluation method")->check(CLI::IsMember(method_names()));
        sub->add_option("--label", o.label, "state sum label of the open strand");
        sub->add_flag("--json", o.json, "print JSON");
    };

    CLI::App* compute = app.add_subcommand("compute", "colored Jones polynomial J_N");
    add_spec(compute);
    compute->add_option("--color", o.color, "color N");
    compute->add_flag("--raw", o.raw, "print the polynomial as computed, without normalizing");

    CLI::App* tail = app.add_subcommand("tail", "tail of J_N(q) over colors 1..nmax");
    CLI::App* head = app.add_subcommand("head", "tail of J_N(1/q) over colors 1..nmax");
    for (CLI::App* sub : {tail, head}) {
        add_spec(sub);
        sub->add_option("--nmax", o.nmax, "largest color")->check(CLI::PositiveNumber);
        sub->add_option("--order", o.order, "series order (default nmax)")->check(CLI::PositiveNumber);
        sub->add_option("--parity", o.parity, "1, or 2 to split odd and even colors")->check(CLI::IsMember({1, 2}));
    }

    CLI::App* series = app.add_subcommand("series", "print a q-series");
    series->add_option("name", o.name, "euler, theta, theta-product, psi, andrews-gordon, p200")->required();
    series->add_option("--a", o.a, "first argument, e.g. -q^4");
    series->add_option("--b", o.b, "second argument");
    series->add_option("--k", o.k, "Andrews-Gordon index");
    series->add_option("--form", o.form, "p200 form")->check(CLI::IsMember({"alternating", "entry9", "p200"}));
    series->add_option("--order", o.order, "series order (default 10)")->check(CLI::PositiveNumber);
    series->add_flag("--json", o.json, "print JSON");

    CLI::App* check = app.add_subcommand("check", "verify an identity");
    check->add_option("name", o.name, "andrews-gordon, p200, jacobi, crossmethod, fourp")
        ->required()
        ->check(CLI::IsMember({"andrews-gordon", "p200", "jacobi", "crossmethod", "fourp"}));
    check->add_option("--k", o.k, "Andrews-Gordon index")->check(CLI::Range(2, 1000));
    check->add_option("--p", o.p, "p of the (4,p) torus knot");
    check->add_option("--a", o.a, "jacobi: first argument");
    check->add_option("--b", o.b, "jacobi: second argument");
    check->add_option("--torus", o.torus, "crossmethod: torus pair m p")->expected(2);
    check->add_option("--nmax", o.nmax, "crossmethod: largest color (default 5)")->check(CLI::PositiveNumber);
    check->add_option("--order", o.order, "series order (default 30)")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) return detail::run_compute(o, out);
        if (tail->parsed()) return detail::run_extract(o, Side::tail, out);
        if (head->parsed()) return detail::run_extract(o, Side::head, out);
        if (series->parsed()) return detail::run_series(o, out);
        if (check->parsed()) {
            if (!check->count("--nmax")) o.nmax = 5;
            return detail::run_check(o, out);
        }
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MethodMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kUsage;
}

} // namespace qtail::cli
