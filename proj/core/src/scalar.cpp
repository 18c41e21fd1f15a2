#include "fpadic/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace fpadic {

namespace {

mpz_class mod_inverse(const mpz_class& u, const mpz_class& modulus) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw Error("non-unit has no inverse modulo p^N");
    }
    return inv;
}

long valuation_of(const mpq_class& q, long p) {
    mpz_class t, pz(p);
    long vn = static_cast<long>(
        mpz_remove(t.get_mpz_t(), q.get_num().get_mpz_t(), pz.get_mpz_t()));
    if (q.get_den() == 1) return vn;
    long vd = static_cast<long>(
        mpz_remove(t.get_mpz_t(), q.get_den().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

} // namespace

Scalar::Scalar(const Context& ctx, mpq_class value)
    : ctx_(ctx), value_(std::move(value)) {
    value_.canonicalize();
    zero_ = value_ == 0;
    v_ = zero_ ? 0 : valuation_of(value_, ctx_.p());
    if (!zero_ && v_ < -static_cast<long>(ctx_.valuation_floor())) {
        throw ValuationFloorError("valuation " + std::to_string(v_) +
                                  " below floor -" +
                                  std::to_string(ctx_.valuation_floor()));
    }
}

void Scalar::check_same_context(const Scalar& x, const Scalar& y) {
    if (x.ctx_ != y.ctx_) throw Error("scalars from different contexts");
}

Scalar Scalar::from_integer(long n, const Context& ctx) {
    return Scalar(ctx, mpq_class(n));
}

Scalar Scalar::from_integer(const mpz_class& n, const Context& ctx) {
    return Scalar(ctx, mpq_class(n));
}

Scalar Scalar::from_rational(const mpz_class& num, const mpz_class& den,
                             const Context& ctx, bool allow_p_in_denominator) {
    if (den == 0) throw Error("denominator is zero");
    mpq_class q(num, den);
    q.canonicalize();
    if (!allow_p_in_denominator && q != 0 &&
        mpz_divisible_ui_p(q.get_den().get_mpz_t(),
                           static_cast<unsigned long>(ctx.p()))) {
        throw Error("denominator divisible by p");
    }
    return Scalar(ctx, std::move(q));
}

Scalar Scalar::p_power(long e, const Context& ctx) {
    if (e >= 0) return Scalar(ctx, mpq_class(ctx.pow_p(e)));
    return Scalar(ctx, mpq_class(1, ctx.pow_p(-e)));
}

long Scalar::valuation() const {
    if (zero_) throw Error("valuation of exact zero is undefined");
    return v_;
}

mpz_class Scalar::unit() const {
    if (zero_) throw Error("unit part of exact zero is undefined");
    // value = p^v * a/b with a, b coprime to p; unit = a * b^{-1} mod p^N.
    mpz_class a, b, pz(ctx_.p());
    mpz_remove(a.get_mpz_t(), value_.get_num().get_mpz_t(), pz.get_mpz_t());
    mpz_remove(b.get_mpz_t(), value_.get_den().get_mpz_t(), pz.get_mpz_t());
    mpz_class u;
    mpz_mod(u.get_mpz_t(), a.get_mpz_t(), ctx_.modulus().get_mpz_t());
    if (b != 1) {
        mpz_class binv = mod_inverse(b, ctx_.modulus());
        mpz_mod(u.get_mpz_t(), mpz_class(u * binv).get_mpz_t(),
                ctx_.modulus().get_mpz_t());
    }
    return u;
}

double Scalar::norm() const {
    if (zero_) return 0.0;
    return norm_from_valuation(ctx_.p(), v_);
}

Scalar Scalar::operator-() const { return Scalar(ctx_, mpq_class(-value_)); }

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar::check_same_context(x, y);
    return Scalar(x.ctx_, mpq_class(x.value_ + y.value_));
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    Scalar::check_same_context(x, y);
    return Scalar(x.ctx_, mpq_class(x.value_ - y.value_));
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar::check_same_context(x, y);
    return Scalar(x.ctx_, mpq_class(x.value_ * y.value_));
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    Scalar::check_same_context(x, y);
    if (y.zero_) throw Error("division by exact zero");
    return Scalar(x.ctx_, mpq_class(x.value_ / y.value_));
}

bool operator==(const Scalar& x, const Scalar& y) {
    Scalar::check_same_context(x, y);
    return x.value_ == y.value_;
}

mpz_class Scalar::residue(int k) const {
    if (k < 0) throw Error("negative residue modulus");
    if (zero_) return mpz_class(0);
    if (v_ < 0) {
        throw PrecisionError("residue of a value with negative valuation");
    }
    if (k > ctx_.precision()) {
        throw PrecisionError("residue modulus p^" + std::to_string(k) +
                             " exceeds held precision");
    }
    mpz_class m = ctx_.pow_p(k);
    mpz_class den_inv = mod_inverse(value_.get_den(), m);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), mpz_class(value_.get_num() * den_inv).get_mpz_t(),
            m.get_mpz_t());
    return r;
}

mpz_class Scalar::balanced_residue(int k) const {
    mpz_class r = residue(k);
    mpz_class m = ctx_.pow_p(k);
    if (2 * r > m) r -= m;
    return r;
}

std::vector<int> Scalar::digits() const {
    long lo = std::min(v_, 0L);
    if (zero_) lo = 0;
    size_t count = static_cast<size_t>(ctx_.precision() - lo);
    std::vector<int> out(count, 0);
    if (zero_) return out;

    // Digits of the p-adic integer value * p^{-lo} over [0, N - lo).
    mpz_class m = ctx_.pow_p(ctx_.precision() - lo);
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    if (lo < 0) num *= ctx_.pow_p(-lo);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), mpz_class(num * mod_inverse(den, m)).get_mpz_t(),
            m.get_mpz_t());
    for (size_t i = 0; i < count; ++i) {
        out[i] = static_cast<int>(
            mpz_fdiv_ui(r.get_mpz_t(), static_cast<unsigned long>(ctx_.p())));
        mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(),
                      static_cast<unsigned long>(ctx_.p()));
    }
    return out;
}

std::string Scalar::to_digit_string() const {
    if (zero_) return "0";
    std::ostringstream os;
    long lo = std::min(v_, 0L);
    std::vector<int> d = digits();
    bool first = true;
    for (size_t i = 0; i < d.size(); ++i) {
        int di = d[i];
        if (di == 0) continue;
        long e = lo + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << di;
        } else if (e == 1) {
            os << di << "*" << ctx_.p();
        } else {
            os << di << "*" << ctx_.p() << "^" << e;
        }
    }
    if (first) os << "0"; // nonzero value, but zero modulo p^N
    os << " + O(" << ctx_.p() << "^" << ctx_.precision() << ")";
    return os.str();
}

std::string Scalar::to_canonical_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "0 mod " << ctx_.p() << "^" << ctx_.precision();
        return os.str();
    }
    os << ctx_.p() << "^" << v_ << " * " << unit().get_str() << " mod "
       << ctx_.p() << "^" << ctx_.precision();
    return os.str();
}

std::string Scalar::to_rational_string() const {
    if (zero_) return "0";
    return value_.get_str();
}

bool congruent(const Scalar& x, const Scalar& y, long k) {
    long xneg = x.is_zero() ? 0 : std::max(-x.valuation(), 0L);
    long yneg = y.is_zero() ? 0 : std::max(-y.valuation(), 0L);
    long cap = x.context().precision() - std::max(xneg, yneg);
    if (k > cap) {
        throw PrecisionError("congruence modulus p^" + std::to_string(k) +
                             " exceeds held precision (max " +
                             std::to_string(cap) + ")");
    }
    Scalar d = x - y;
    return d.is_zero() || d.valuation() >= k;
}

Scalar parse_scalar(std::string_view text, const Context& ctx) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.empty()) throw ParseError("empty scalar literal");

    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = strip(text.substr(0, slash));
        den_part = strip(text.substr(slash + 1));
        if (den_part.empty()) throw ParseError("missing denominator in '" + std::string(text) + "'");
    }

    auto to_mpz = [&](std::string_view s) {
        try {
            return mpz_class(std::string(s), 10);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer literal '" + std::string(s) + "'");
        }
    };
    mpz_class num = to_mpz(num_part);
    mpz_class den = den_part.empty() ? mpz_class(1) : to_mpz(den_part);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar::from_rational(num, den, ctx);
}

} // namespace fpadic
