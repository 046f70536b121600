#include "amoeba/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace amoeba {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int img : images_) {
        if (img < 0 || img >= degree() || seen[img]) {
            throw std::invalid_argument("permutation image table is not a bijection");
        }
        seen[img] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 0 || b < 0 || a >= degree || b >= degree) {
        throw std::invalid_argument("transposition point out of range");
    }
    Permutation p = identity(degree);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation& sigma, const Permutation& rho) {
    if (sigma.degree() != rho.degree()) {
        throw std::invalid_argument("composing permutations of different degrees");
    }
    std::vector<int> images(sigma.degree());
    for (int i = 0; i < sigma.degree(); ++i) images[i] = sigma(rho(i));
    return Permutation(std::move(images));
}

std::string Permutation::cycle_string() const {
    std::vector<bool> done(images_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (int start = 0; start < degree(); ++start) {
        if (done[start] || images_[start] == start) continue;
        any = true;
        out << '(';
        int p = start;
        bool first = true;
        while (!done[p]) {
            done[p] = true;
            if (!first) out << ' ';
            out << (p + 1);
            first = false;
            p = images_[p];
        }
        out << ')';
    }
    return any ? out.str() : "()";
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
    Permutation result = identity(degree);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw std::invalid_argument("expected point index in cycle notation");
            }
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            if (value < 1 || value > degree) {
                throw std::invalid_argument("cycle point out of range");
            }
            cycle.push_back(value - 1);
        }
        for (size_t i = 0; i + 1 < cycle.size(); ++i) {
            result.images_[cycle[i]] = cycle[i + 1];
        }
        if (cycle.size() > 1) result.images_[cycle.back()] = cycle.front();
        skip_ws();
    }
    // validate: composing raw cycles may produce a non-bijection when points repeat
    return Permutation(result.images_);
}

Permutation Permutation::extended(int new_degree) const {
    if (new_degree < degree()) throw std::invalid_argument("extended degree smaller than current");
    std::vector<int> images(images_);
    images.reserve(new_degree);
    for (int i = degree(); i < new_degree; ++i) images.push_back(i);
    return Permutation(std::move(images));
}

Permutation Permutation::shifted(int offset, int new_degree) const {
    if (offset < 0 || offset + degree() > new_degree) {
        throw std::invalid_argument("shifted block does not fit in new degree");
    }
    std::vector<int> images(new_degree);
    for (int i = 0; i < new_degree; ++i) images[i] = i;
    for (int i = 0; i < degree(); ++i) images[offset + i] = offset + images_[i];
    return Permutation(std::move(images));
}

size_t PermutationHash::operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int img : p.images()) {
        h ^= static_cast<size_t>(img) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace amoeba
