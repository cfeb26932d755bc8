#include "fpsr/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "fpsr/errors.hpp"

namespace fpsr {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw Error(ErrorKind::invalid_argument, "not a rational number: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto n = body.substr(0, slash);
        auto d = body.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) bad_rational(text);
        mpz_class den(std::string(d), 10);
        if (den == 0) bad_rational(text);
        out = Rational(mpz_class(std::string(n), 10), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            bad_rational(text);
        mpz_class whole(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        out = Rational(whole, pow10(static_cast<unsigned>(fp.size())));
    } else {
        if (!all_digits(body)) bad_rational(text);
        out = Rational(mpz_class(std::string(body), 10));
    }
    return negative ? -out : out;
}

std::string Rational::str() const { return v_.get_str(10); }

std::string Rational::to_decimal(int digits) const {
    if (digits < 1) throw Error(ErrorKind::invalid_argument, "digits must be positive");
    if (is_zero()) return "0";
    mpq_class x = ::abs(v_);
    // e = floor(log10 x), starting from a digit-count estimate.
    long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
    auto ten_pow = [](long k) {
        return k >= 0 ? mpq_class(pow10(static_cast<unsigned>(k)))
                      : mpq_class(mpz_class(1), pow10(static_cast<unsigned>(-k)));
    };
    while (x < ten_pow(e)) --e;
    while (x >= ten_pow(e + 1)) ++e;

    mpq_class scaled = x * ten_pow(digits - 1 - e) + mpq_class(1, 2);
    mpz_class q = scaled.get_num() / scaled.get_den();
    if (q == pow10(static_cast<unsigned>(digits))) {
        q /= 10;
        ++e;
    }
    std::string d = q.get_str();
    while (d.size() > 1 && d.back() == '0') d.pop_back();

    std::string out = sign() < 0 ? "-" : "";
    if (e < -6 || e >= 21) {
        out += d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += (e < 0 ? "e-" : "e+") + std::to_string(std::labs(e));
    } else if (e < 0) {
        out += "0." + std::string(static_cast<size_t>(-e - 1), '0') + d;
    } else {
        auto int_len = static_cast<size_t>(e + 1);
        if (d.size() <= int_len) {
            out += d + std::string(int_len - d.size(), '0');
        } else {
            out += d.substr(0, int_len) + "." + d.substr(int_len);
        }
    }
    return out;
}

double Rational::log_abs() const {
    if (is_zero()) return -HUGE_VAL;
    long en = 0;
    long ed = 0;
    double mn = std::fabs(mpz_get_d_2exp(&en, v_.get_num_mpz_t()));
    double md = mpz_get_d_2exp(&ed, v_.get_den_mpz_t());
    return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
    return Rational(mpq_class(v_.get_den(), v_.get_num()));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return "parse error";
        case ErrorKind::hypothesis_violation: return "hypothesis violation";
        case ErrorKind::resonance: return "resonance";
        case ErrorKind::insufficient_precision: return "insufficient precision";
        case ErrorKind::internal_consistency: return "internal consistency";
        case ErrorKind::prefix_inconsistent: return "prefix inconsistent";
        case ErrorKind::no_formal_solution: return "no formal solution";
        case ErrorKind::numeric_failure: return "numeric failure";
        case ErrorKind::insufficient_data: return "insufficient data";
        case ErrorKind::invalid_argument: return "invalid argument";
    }
    return "unknown";
}

}  // namespace fpsr
