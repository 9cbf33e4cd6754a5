#include "cpm/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cpm {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        out.img_[x] = next.img_[static_cast<std::size_t>(img_[x])];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        out.img_[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
    return out;
}

Permutation Permutation::power(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    Permutation acc = identity(degree());
    while (k > 0) {
        if (k & 1) acc = acc.then(base);
        base = base.then(base);
        k >>= 1;
    }
    return acc;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return false;
    return true;
}

std::string Permutation::to_line() const {
    std::ostringstream os;
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (x) os << ' ';
        os << img_[x];
    }
    return os.str();
}

Permutation Permutation::from_line(const std::string& line) {
    std::istringstream is(line);
    std::vector<int> img;
    int v;
    while (is >> v) img.push_back(v);
    return Permutation(std::move(img));
}

}  // namespace cpm
