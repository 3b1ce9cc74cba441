#include "qzeta/cli.hpp"

#include "qzeta/analytic.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/qbernoulli.hpp"
#include "qzeta/volkenborn.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace qzeta {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string output;
    long precision = 20;
    std::int64_t max_terms = 10'000'000;
    int truncation = -1;

    int h = 1;
    int n = 0;
    int m = 2;
    int b = 1;
    std::int64_t p = 5;
    std::int64_t modulus = 1;
    std::int64_t char_index = 0;
    std::string q;
    std::string s;
    std::string x = "1";
    std::string t;
    std::string levels;
    double tol = -1.0;
    int slack = 3;
    std::string target;
};

double parse_real(const std::string& text) {
    try {
        return parse_rational(text).get_d();
    } catch (const std::exception&) {
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size())
        throw UsageError("not a number: '" + text + "'");
    return v;
}

// "a", "bi", "a+bi", "a-bi"
Complex parse_complex(std::string text) {
    text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
    if (text.empty())
        throw UsageError("empty complex number");
    if (text.back() != 'i')
        return parse_real(text);
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+")
            return 1.0;
        if (s == "-")
            return -1.0;
        return parse_real(s);
    };
    if (split == std::string::npos)
        return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

// "3..7", "3,5,6" or "4"
std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("bad --levels value '" + text + "'");
        }
        if (used != s.size() || v < 0)
            throw UsageError("bad --levels value '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
        if (lo > hi)
            throw UsageError("empty --levels range '" + text + "'");
        for (int k = lo; k <= hi; ++k)
            out.push_back(k);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(to_int(item));
    if (out.empty())
        throw UsageError("empty --levels");
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json complex_json(Complex z) {
    Json j;
    j["re"] = format_double(z.real());
    j["im"] = format_double(z.imag());
    return j;
}

Json unity_root_json(const UnityRoot& u) {
    if (u.is_zero())
        return nullptr;
    return to_string(u.exponent());
}

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {}

    std::string bernoulli() {
        require_nonnegative_n();
        const QBernoulliTable table = q_bernoulli_numbers(o_.h, o_.n);
        if (!o_.q.empty()) {
            const Complex qv = parse_complex(o_.q);
            std::vector<Complex> values;
            for (const auto& b : table.values)
                values.push_back(eval_complex(b, qv));
            return numeric_table(values, {{"h", std::to_string(o_.h)}, {"q", format_complex(qv)}});
        }
        if (o_.format == "csv")
            throw UsageError("csv output needs --q");
        Json j;
        j["h"] = o_.h;
        j["n"] = o_.n;
        Json values = Json::array();
        for (int k = 0; k <= o_.n; ++k) {
            Json e;
            e["n"] = k;
            e["value"] = to_json(table.values[static_cast<std::size_t>(k)]);
            values.push_back(std::move(e));
        }
        j["values"] = std::move(values);
        if (o_.format == "text") {
            std::ostringstream os;
            for (const auto& e : j["values"])
                os << "B_" << e["n"].get<int>() << " = " << e["value"].dump() << "\n";
            return os.str();
        }
        return dump(j);
    }

    std::string polynomial() {
        require_nonnegative_n();
        if (o_.format == "csv")
            throw UsageError("csv output is only available for numeric tables");
        const XPolynomial poly = q_bernoulli_polynomial(o_.h, o_.n);
        Json j;
        j["h"] = o_.h;
        j["n"] = o_.n;
        Json coeffs = Json::array();
        for (int k = 0; k <= o_.n; ++k)
            coeffs.push_back(to_json(poly.coeff(static_cast<std::size_t>(k))));
        j["coefficients"] = std::move(coeffs);
        if (o_.format == "text") {
            std::ostringstream os;
            for (int k = 0; k <= o_.n; ++k)
                os << "x^" << k << ": " << j["coefficients"][static_cast<std::size_t>(k)].dump() << "\n";
            return os.str();
        }
        return dump(j);
    }

    std::string generalized() {
        require_nonnegative_n();
        const DirichletCharacter chi = character(o_.modulus, o_.char_index);
        if (!o_.q.empty()) {
            const Complex qv = parse_complex(o_.q);
            std::vector<Complex> values;
            for (int k = 0; k <= o_.n; ++k)
                values.push_back(generalized_q_bernoulli(chi, o_.h, k, qv));
            return numeric_table(values, {{"modulus", std::to_string(o_.modulus)},
                                          {"char_index", std::to_string(o_.char_index)},
                                          {"h", std::to_string(o_.h)},
                                          {"q", format_complex(qv)}});
        }
        if (o_.format == "csv")
            throw UsageError("csv output needs --q");
        if (!chi.is_real())
            throw UsageError("exact output needs a real character; pass --q for numeric values");
        Json j;
        j["modulus"] = o_.modulus;
        j["char_index"] = o_.char_index;
        j["h"] = o_.h;
        Json values = Json::array();
        for (int k = 0; k <= o_.n; ++k) {
            Json e;
            e["n"] = k;
            e["value"] = to_json(generalized_q_bernoulli_exact(chi, o_.h, k));
            values.push_back(std::move(e));
        }
        j["values"] = std::move(values);
        return dump(j);
    }

    std::string characters() {
        if (o_.modulus < 1)
            throw UsageError("--modulus must be >= 1");
        Json arr = Json::array();
        std::ostringstream text;
        for (const auto& chi : enumerate_characters(o_.modulus)) {
            Json j;
            j["modulus"] = chi.modulus();
            j["index"] = chi.index();
            j["exponents"] = chi.exponents();
            j["conductor"] = conductor(chi);
            Json values = Json::array();
            text << "chi_" << chi.index() << " (conductor " << conductor(chi) << "):";
            for (std::int64_t a = 0; a < chi.modulus(); ++a) {
                const UnityRoot v = chi(a);
                values.push_back(unity_root_json(v));
                text << " " << (v.is_zero() ? std::string("0") : "e(" + to_string(v.exponent()) + ")");
            }
            text << "\n";
            j["values"] = std::move(values);
            arr.push_back(std::move(j));
        }
        if (o_.format == "csv")
            throw UsageError("csv output is only available for numeric tables");
        return o_.format == "text" ? text.str() : dump(arr);
    }

    std::string zeta() {
        const Complex qv = parse_complex(require(o_.q, "--q"));
        const Complex s = parse_complex(require(o_.s, "--s"));
        const double x = parse_real(o_.x);
        const SeriesValue v = q_hurwitz_zeta(o_.h, qv, s, x, series_config());
        return series_output(v, {{"h", std::to_string(o_.h)},
                                 {"q", format_complex(qv)},
                                 {"s", format_complex(s)},
                                 {"x", format_double(x)}});
    }

    std::string lfunction() {
        const Complex qv = parse_complex(require(o_.q, "--q"));
        const Complex s = parse_complex(require(o_.s, "--s"));
        const DirichletCharacter chi = character(o_.modulus, o_.char_index);
        const SeriesValue v = q_l_function(o_.h, qv, s, chi, series_config());
        return series_output(v, {{"modulus", std::to_string(o_.modulus)},
                                 {"char_index", std::to_string(o_.char_index)},
                                 {"h", std::to_string(o_.h)},
                                 {"q", format_complex(qv)},
                                 {"s", format_complex(s)}});
    }

    std::pair<std::string, bool> verify() {
        if (o_.format == "csv")
            throw UsageError("verification reports are JSON or text");
        const VerificationReport r = run_verification();
        const std::string body = o_.format == "text" ? render_text(r) : dump(to_json(r));
        return {body, r.pass};
    }

private:
    VerificationReport run_verification() {
        const std::string& target = o_.target;
        const double tol = o_.tol > 0 ? o_.tol : 1e-8;
        VolkenbornOptions vopts;
        vopts.slack = o_.slack;
        if (target == "distribution") {
            require_nonnegative_n();
            return distribution_check(o_.h, o_.n, o_.m);
        }
        if (target == "genfunction")
            return gen_function_identity_check(o_.h, o_.truncation >= 0 ? o_.truncation : (o_.n > 0 ? o_.n : 12));
        if (target == "interp-zeta") {
            require_positive_n();
            return zeta_interpolation_verify(o_.h, parse_complex(require(o_.q, "--q")), o_.n, parse_real(o_.x),
                                             series_config(), tol);
        }
        if (target == "interp-l") {
            require_positive_n();
            return l_interpolation_verify(o_.h, parse_complex(require(o_.q, "--q")), o_.n,
                                          character(o_.modulus, o_.char_index), series_config(), tol);
        }
        const std::vector<int> levels = parse_levels(o_.levels.empty() ? "3..6" : o_.levels);
        const int top = *std::max_element(levels.begin(), levels.end());
        const long prec = o_.precision + top + 10;
        const Padic q = padic_q(prec);
        if (target == "witt") {
            require_nonnegative_n();
            return witt_verify(o_.h, o_.n, q, levels, vopts);
        }
        if (target == "shift") {
            require_nonnegative_n();
            return shift_identity_verify(MonomialTestFunction{o_.n, o_.h, q}, o_.b, levels, vopts);
        }
        if (target == "closedform") {
            const Rational t = o_.t.empty() ? Rational(o_.p) : parse_rational(o_.t);
            return closed_form_verify(o_.h, Padic::from_rational(o_.p, t, prec), q, levels, vopts);
        }
        if (target == "eq9") {
            require_nonnegative_n();
            return padic_generalized_verify(character(o_.modulus, o_.char_index), o_.h, o_.n, q, levels, vopts);
        }
        throw UsageError("unknown verify target '" + target + "'");
    }

    Padic padic_q(long prec) const {
        if (o_.p < 2)
            throw UsageError("--p must be a prime");
        for (std::int64_t k = 2; k * k <= o_.p; ++k)
            if (o_.p % k == 0)
                throw UsageError("--p must be a prime");
        const Rational qv = o_.q.empty() ? Rational(1 + o_.p) : parse_rational(o_.q);
        return Padic::from_rational(o_.p, qv, prec);
    }

    SeriesEvalConfig series_config() const {
        SeriesEvalConfig cfg;
        cfg.max_terms = o_.max_terms;
        if (o_.target.empty() && o_.tol > 0)
            cfg.tol = o_.tol;
        return cfg;
    }

    std::string numeric_table(const std::vector<Complex>& values,
                              const std::vector<std::pair<std::string, std::string>>& params) const {
        if (o_.format == "csv") {
            std::ostringstream os;
            os << "n,re,im\n";
            for (std::size_t k = 0; k < values.size(); ++k)
                os << k << "," << format_double(values[k].real()) << "," << format_double(values[k].imag()) << "\n";
            return os.str();
        }
        if (o_.format == "text") {
            std::ostringstream os;
            for (std::size_t k = 0; k < values.size(); ++k)
                os << k << ": " << format_complex(values[k]) << "\n";
            return os.str();
        }
        Json j;
        for (const auto& [k, v] : params)
            j[k] = v;
        Json arr = Json::array();
        for (std::size_t k = 0; k < values.size(); ++k) {
            Json e = complex_json(values[k]);
            Json row;
            row["n"] = k;
            row["re"] = e["re"];
            row["im"] = e["im"];
            arr.push_back(std::move(row));
        }
        j["values"] = std::move(arr);
        return dump(j);
    }

    std::string series_output(const SeriesValue& v,
                              const std::vector<std::pair<std::string, std::string>>& params) const {
        if (o_.format == "csv") {
            std::ostringstream head, row;
            for (const auto& [k, val] : params) {
                head << k << ",";
                row << '"' << val << '"' << ",";
            }
            head << "re,im,tail_bound\n";
            row << format_double(v.value.real()) << "," << format_double(v.value.imag()) << ","
                << format_double(v.tail_bound) << "\n";
            return head.str() + row.str();
        }
        if (o_.format == "text")
            return format_complex(v.value) + "  (tail <= " + format_double(v.tail_bound) + ", " +
                   std::to_string(v.terms) + " terms)\n";
        Json j;
        for (const auto& [k, val] : params)
            j[k] = val;
        j["re"] = format_double(v.value.real());
        j["im"] = format_double(v.value.imag());
        j["tail_bound"] = format_double(v.tail_bound);
        j["terms"] = v.terms;
        return dump(j);
    }

    static const std::string& require(const std::string& v, const char* flag) {
        if (v.empty())
            throw UsageError(std::string(flag) + " is required");
        return v;
    }
    void require_nonnegative_n() const {
        if (o_.n < 0)
            throw UsageError("--n must be nonnegative");
    }
    void require_positive_n() const {
        if (o_.n < 1)
            throw UsageError("--n must be >= 1");
    }

    const Options& o_;
};

long default_precision() {
    if (const char* env = std::getenv("QZK_DEFAULT_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 20;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    o.precision = default_precision();

    CLI::App app{"q-Bernoulli numbers, q-zeta and q-L functions, and identity checks", "qzk"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.add_option("--format", o.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output", o.output, "write output to this file");
    app.add_option("--precision", o.precision, "p-adic digits of precision (QZK_DEFAULT_PRECISION)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-terms", o.max_terms, "series term cap")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{100'000'000}))
        ->capture_default_str();
    app.add_option("--truncation", o.truncation, "power-series truncation order");
    app.fallthrough();

    auto* bernoulli = app.add_subcommand("bernoulli", "B_{0..n,q}^{(h)} exactly, or at numeric --q");
    bernoulli->add_option("--h", o.h)->required();
    bernoulli->add_option("--n", o.n)->required();
    bernoulli->add_option("--q", o.q, "complex q for numeric evaluation");

    auto* polynomial = app.add_subcommand("polynomial", "coefficients of B_{n,q}^{(h)}(x)");
    polynomial->add_option("--h", o.h)->required();
    polynomial->add_option("--n", o.n)->required();

    auto* generalized = app.add_subcommand("generalized", "character-twisted Bernoulli numbers");
    generalized->add_option("--modulus", o.modulus)->required();
    generalized->add_option("--char-index", o.char_index)->required();
    generalized->add_option("--h", o.h)->required();
    generalized->add_option("--n", o.n)->required();
    generalized->add_option("--q", o.q, "complex q; omit for exact values of a real character");

    auto* characters = app.add_subcommand("characters", "Dirichlet characters mod d");
    characters->add_option("--modulus", o.modulus)->required();

    auto* zeta = app.add_subcommand("zeta", "q-Hurwitz zeta value");
    zeta->add_option("--h", o.h)->required();
    zeta->add_option("--q", o.q)->required();
    zeta->add_option("--s", o.s)->required();
    zeta->add_option("--x", o.x, "Hurwitz shift (default 1)");
    zeta->add_option("--tol", o.tol, "truncation tolerance");

    auto* lfunction = app.add_subcommand("lfunction", "q-L function value");
    lfunction->add_option("--modulus", o.modulus)->required();
    lfunction->add_option("--char-index", o.char_index)->required();
    lfunction->add_option("--h", o.h)->required();
    lfunction->add_option("--q", o.q)->required();
    lfunction->add_option("--s", o.s)->required();
    lfunction->add_option("--tol", o.tol, "truncation tolerance");

    auto* verify = app.add_subcommand("verify", "check an identity and emit a report");
    verify->add_option("target", o.target, "witt|shift|closedform|distribution|genfunction|interp-zeta|interp-l|eq9")
        ->required()
        ->check(CLI::IsMember(
            {"witt", "shift", "closedform", "distribution", "genfunction", "interp-zeta", "interp-l", "eq9"}));
    verify->add_option("--p", o.p, "prime (default 5)");
    verify->add_option("--q", o.q, "q: rational for p-adic targets, complex for analytic ones");
    verify->add_option("--h", o.h);
    verify->add_option("--n", o.n);
    verify->add_option("--m", o.m);
    verify->add_option("--b", o.b);
    verify->add_option("--t", o.t, "closed-form parameter (default p)");
    verify->add_option("--x", o.x);
    verify->add_option("--levels", o.levels, "levels N, e.g. 3..7 or 3,5");
    verify->add_option("--tol", o.tol, "numeric tolerance (default 1e-8)");
    verify->add_option("--slack", o.slack, "valuation slack (default 3)");
    verify->add_option("--modulus", o.modulus);
    verify->add_option("--char-index", o.char_index);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "qzk: " << e.what() << "\n";
        return exit_usage;
    }

    Runner runner(o);
    std::string body;
    int code = exit_ok;
    try {
        if (*bernoulli)
            body = runner.bernoulli();
        else if (*polynomial)
            body = runner.polynomial();
        else if (*generalized)
            body = runner.generalized();
        else if (*characters)
            body = runner.characters();
        else if (*zeta)
            body = runner.zeta();
        else if (*lfunction)
            body = runner.lfunction();
        else if (*verify) {
            auto [text, pass] = runner.verify();
            body = std::move(text);
            code = pass ? exit_ok : exit_verification_failed;
        }
    } catch (const UsageError& e) {
        err << "qzk: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "qzk: " << e.what() << "\n";
        return exit_usage;
    } catch (const PrecisionError& e) {
        err << "qzk: precision: " << e.what() << "\n";
        return exit_precision;
    } catch (const std::exception& e) {
        err << "qzk: " << e.what() << "\n";
        return exit_precision;
    }

    if (o.output.empty()) {
        out << body;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "qzk: cannot open " << o.output << "\n";
            return exit_usage;
        }
        file << body;
    }
    return code;
}

} // namespace qzeta
