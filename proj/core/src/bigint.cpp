#include "cpm/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cpm {

BigUint::BigUint(std::uint64_t v) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    trim();
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(unsigned k) {
    BigUint r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = 1u << (k % 32);
    return r;
}

BigUint& BigUint::operator*=(std::uint64_t f) {
    if (f == 0) {
        limbs_.assign(1, 0);
        return *this;
    }
    std::uint64_t lo = f & 0xffffffffu, hi = f >> 32;
    std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i];
        std::uint64_t p0 = cur * lo;
        std::uint64_t p1 = cur * hi;
        // accumulate p0 at position i, p1 at position i+1
        std::uint64_t carry = 0;
        std::uint64_t acc = static_cast<std::uint64_t>(out[i]) + (p0 & 0xffffffffu);
        out[i] = static_cast<std::uint32_t>(acc);
        carry = acc >> 32;
        acc = static_cast<std::uint64_t>(out[i + 1]) + (p0 >> 32) + (p1 & 0xffffffffu) + carry;
        out[i + 1] = static_cast<std::uint32_t>(acc);
        carry = acc >> 32;
        std::size_t j = i + 2;
        std::uint64_t rest = (p1 >> 32) + carry;
        while (rest) {
            if (j >= out.size()) out.push_back(0);
            acc = static_cast<std::uint64_t>(out[j]) + (rest & 0xffffffffu);
            out[j] = static_cast<std::uint32_t>(acc);
            rest = (rest >> 32) + (acc >> 32);
            ++j;
        }
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigUint BigUint::operator*(std::uint64_t f) const {
    BigUint r = *this;
    r *= f;
    return r;
}

BigUint BigUint::operator*(const BigUint& other) const {
    BigUint acc;
    acc.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < other.limbs_.size(); ++i) {
        if (other.limbs_[i] == 0) continue;
        std::uint64_t f = other.limbs_[i];
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < limbs_.size() || carry; ++j) {
            std::uint64_t cur = acc.limbs_[i + j] + carry;
            if (j < limbs_.size()) cur += f * limbs_[j];
            acc.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
    }
    acc.trim();
    return acc;
}

bool BigUint::operator<(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() < other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i];
    }
    return false;
}

std::uint64_t BigUint::as_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::as_u64: value too large");
    std::uint64_t v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
}

std::string BigUint::to_string() const {
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!(work.size() == 1 && work[0] == 0)) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (work.size() > 1 && work.back() == 0) work.pop_back();
        bool last = (work.size() == 1 && work[0] == 0);
        std::string chunk = std::to_string(rem);
        if (!last) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.to_string(); }

}  // namespace cpm
