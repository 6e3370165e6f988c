#include "rcweyl/rational.hpp"

#include <ostream>

namespace rcweyl {

BigRat BigRat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigRat::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(s, 10);
            q.canonicalize();
            return BigRat(q);
        }
        mpz_class n(s.substr(0, slash), 10);
        mpz_class d(s.substr(slash + 1), 10);
        if (d == 0) throw std::domain_error("BigRat::parse: zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return BigRat(q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("BigRat::parse: bad literal '" + s + "'");
    }
}

BigRat BigRat::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return BigRat(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.v_; }

BigRat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRat(f);
}

BigRat binomial(long n, long k) {
    if (k < 0) return BigRat(0);
    // Generalized binomial: n may be negative or smaller than k.
    BigRat acc(1);
    for (long i = 0; i < k; ++i) acc *= BigRat(n - i);
    return acc / factorial(static_cast<unsigned>(k));
}

BigRat falling(long n, unsigned k) {
    BigRat acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= BigRat(n - static_cast<long>(i));
    return acc;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace rcweyl
