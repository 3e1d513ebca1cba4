#ifndef CHIRAL_INTEGER_HPP
#define CHIRAL_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace chiral {

// All integer arithmetic in the library is arbitrary precision.
using Int = mpz_class;
using Rat = mpq_class;

/// Reduce a rational to its representative in [0, 1), i.e. the class in Q/Z.
inline Rat mod1(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat out(m, den);
    out.canonicalize();
    return out;
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace chiral

#endif
