#ifndef STABDEC_RATIONAL_HPP
#define STABDEC_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace stabdec {

// Exact rational scalar used everywhere. Doubles never touch a value that a
// test or a polytope row depends on.
using Rat = mpq_class;

using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

// Accepts "p", "p/q", and decimal literals like "-1.25".
std::optional<Rat> parse_rat(const std::string& s);

// Least common multiple of denominators, for integer row scaling.
mpz_class denominator_lcm(const std::vector<Rat>& vals);

}  // namespace stabdec

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 120,
        MulCost = 120,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
