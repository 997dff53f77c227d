#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hvs/models.hpp"

namespace hvs::test {

inline Vector vec(const char* text) { return Vector::parse(text); }
inline Scalar sc(const char* text) { return Scalar::parse(text); }

inline ModelSpec model(Family f, std::size_t dim = 2, FieldTag field = FieldTag::RealRationals,
                       Rational ratio = Rational(1, 2))
{
    return {field, dim, f, ratio};
}

inline ModelSpec trivial(std::size_t dim = 2) { return model(Family::Trivial, dim); }
inline ModelSpec zero_aug(std::size_t dim = 2, FieldTag f = FieldTag::RealRationals)
{
    return model(Family::ZeroAugmented, dim, f);
}
inline ModelSpec geometric(Rational r, std::size_t dim = 2) { return model(Family::Geometric, dim, FieldTag::RealRationals, r); }
inline ModelSpec sign(std::size_t dim = 2) { return model(Family::Sign, dim); }

inline std::vector<Vector> sorted(std::vector<Vector> v)
{
    std::sort(v.begin(), v.end(), VectorLess{});
    return v;
}

}  // namespace hvs::test
