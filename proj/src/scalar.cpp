#include "dexsym/scalar.hpp"

namespace dexsym {

namespace {

bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (unsigned long d = 5; d <= p / d; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned long p) {
    if (!is_prime_ul(p)) {
        throw error("FieldSpec: " + std::to_string(p) + " is not prime");
    }
    return FieldSpec(FieldKind::Prime, p);
}

unsigned long FieldSpec::modulus() const {
    if (kind_ != FieldKind::Prime) throw error("FieldSpec: rational field has no modulus");
    return p_;
}

std::string FieldSpec::str() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) {
        throw error("Scalar: field mismatch (" + a.field_.str() + " vs " + b.field_.str() + ")");
    }
}

void Scalar::reduce_mod_p() {
    if (field_.is_rational()) return;
    mpz_class p(static_cast<unsigned long>(field_.modulus()));
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    v_ = mpq_class(r);
}

Scalar Scalar::one(const FieldSpec& f) {
    return Scalar(f, 1);  // 1 is its own residue in every GF(p), p >= 2
}

Scalar Scalar::of_int(long n, const FieldSpec& f) {
    Scalar s(f, mpq_class(n));
    s.reduce_mod_p();
    return s;
}

Scalar Scalar::of_rat(const mpq_class& q, const FieldSpec& f) {
    mpq_class v(q);
    v.canonicalize();
    if (f.is_rational()) return Scalar(f, v);
    mpz_class p(f.modulus());
    mpz_class den_mod;
    mpz_mod(den_mod.get_mpz_t(), v.get_den().get_mpz_t(), p.get_mpz_t());
    if (den_mod == 0) {
        throw error("Scalar: " + v.get_str() + " does not embed in " + f.str());
    }
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t());
    mpz_class r = v.get_num() * den_inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return Scalar(f, mpq_class(r));
}

Scalar Scalar::parse(const std::string& s, const FieldSpec& f) {
    // strict format: -?digits(/digits)?
    auto fail = [&] { throw error("Scalar: cannot parse \"" + s + "\""); };
    if (s.empty()) fail();
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) fail();
    bool seen_slash = false;
    std::size_t slash_pos = 0;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (seen_slash || k == i || k + 1 == s.size()) fail();
            seen_slash = true;
            slash_pos = k;
        } else if (s[k] < '0' || s[k] > '9') {
            fail();
        }
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail();
    if (seen_slash && mpz_class(s.substr(slash_pos + 1)) == 0) {
        throw error("Scalar: zero denominator in \"" + s + "\"");
    }
    q.canonicalize();
    return of_rat(q, f);
}

Scalar Scalar::operator-() const {
    Scalar r(field_, -v_);
    r.reduce_mod_p();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(*this, o);
    v_ += o.v_;
    reduce_mod_p();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(*this, o);
    v_ -= o.v_;
    reduce_mod_p();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(*this, o);
    v_ *= o.v_;
    reduce_mod_p();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("Scalar: division by zero");
    if (field_.is_rational()) return Scalar(field_, 1 / v_);
    mpz_class p(field_.modulus());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(field_, mpq_class(inv));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(*this, o);
    *this *= o.inverse();
    return *this;
}

}  // namespace dexsym
