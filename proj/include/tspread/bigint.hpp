#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace tspread {

/// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
/// Only the operations needed by fraction-free elimination: add, sub,
/// mul, exact division, comparison. Division asserts exactness.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    /// Quotient of an exact division; throws std::logic_error if a
    /// nonzero remainder shows up.
    BigInt div_exact(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    /// Value as long long when it fits; throws std::overflow_error otherwise.
    long long to_ll() const;
    bool fits_ll() const;

    std::string to_string() const;

private:
    int sign_ = 1;                    // meaningful only when limbs_ nonempty
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // long division of magnitudes, returns quotient, rem receives remainder
    static std::vector<std::uint32_t> divmod_mag(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b,
                                                 std::vector<std::uint32_t>& rem);
    void trim();
};

}  // namespace tspread
