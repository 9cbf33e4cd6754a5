#pragma once

#include <string>
#include <vector>

namespace cpm {

// Permutation of {0, .., degree-1} as an image array.  Maps act on the
// right throughout: apply(x) of a composition a.then(b) is b[a[x]].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    Permutation power(long long k) const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    // One-line serialization: space-separated images.
    std::string to_line() const;
    static Permutation from_line(const std::string& line);

private:
    std::vector<int> img_;
};

}  // namespace cpm
