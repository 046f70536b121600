#ifndef AMOEBA_PERMUTATION_HPP
#define AMOEBA_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace amoeba {

/// A permutation of {0, ..., n-1}, stored as the image table.
///
/// All indices are 0-based internally; cycle notation (the text form used by
/// the CLI and JSON reports) is 1-based, e.g. "(1 4)(2 3)". The identity
/// prints as "()".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// Transposition (a b) on `degree` points.
    static Permutation transposition(int degree, int a, int b);
    /// Parse 1-based cycle notation, e.g. "(1 4)(2 3)"; "()" or "" is the identity.
    static Permutation from_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// 1-based disjoint-cycle form; fixed points omitted.
    std::string cycle_string() const;

    /// Same mapping on a larger point set; new points are fixed.
    Permutation extended(int new_degree) const;
    /// Conjugate-free relocation: point p maps to offset + p, acting on `new_degree` points.
    Permutation shifted(int offset, int new_degree) const;

    bool operator==(const Permutation& other) const = default;
    auto operator<=>(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

/// Composition sigma . rho: rho is applied first, (sigma*rho)(x) = sigma(rho(x)).
Permutation compose(const Permutation& sigma, const Permutation& rho);

struct PermutationHash {
    size_t operator()(const Permutation& p) const;
};

}  // namespace amoeba

#endif
