#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpm {

// Arbitrary-precision unsigned integer, just big enough for group orders.
// Vertex stabilizers of Praeger-Xu graphs grow like 2^(s(m-1)+1), which
// overflows 128 bits well inside the census range.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v);

    static BigUint pow2(unsigned k);

    BigUint& operator*=(std::uint64_t f);
    BigUint operator*(std::uint64_t f) const;
    BigUint operator*(const BigUint& other) const;

    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
    bool operator!=(const BigUint& other) const { return !(*this == other); }
    bool operator<(const BigUint& other) const;

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    // Value as uint64 if it fits, otherwise nullopt-like flag via fits_u64().
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const;

    std::string to_string() const;

private:
    // base 2^32, little endian, no leading zero limbs (except the value 0)
    std::vector<std::uint32_t> limbs_;
    void trim();
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

}  // namespace cpm
