#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsb {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Exact coefficient field: the rationals or a prime field F_p.
///
/// Scalars are stored as exact rationals in both cases; in prime mode every
/// value is kept in canonical residue form (an integer in [0, p)).
class Field {
public:
    static Field rationals();
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar normalize(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    Scalar from_int(long long v) const;
    Scalar parse(const std::string& text) const;
    static std::string to_string(const Scalar& a);

    bool is_zero(const Scalar& a) const { return a == 0; }
    bool is_one(const Scalar& a) const { return a == 1; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;  // 0 = rationals
};

}  // namespace gsb
