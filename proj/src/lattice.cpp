#include "sgk/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgk {

WeightVector::WeightVector(int n) : coords_(static_cast<std::size_t>(n), mpq_class(0)) {
    if (n < 1) throw std::invalid_argument("weight vector rank must be positive");
}

WeightVector::WeightVector(std::vector<mpq_class> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("weight vector rank must be positive");
    mpq_class sum = 0;
    for (auto& c : coords_) {
        c.canonicalize();
        sum += c;
    }
    if (sum != 0) throw std::invalid_argument("weight coordinates must sum to zero");
}

WeightVector WeightVector::from_ints(std::span<const long long> coords) {
    std::vector<mpq_class> v;
    v.reserve(coords.size());
    for (long long c : coords) v.emplace_back(static_cast<long>(c));
    return WeightVector(std::move(v));
}

bool WeightVector::is_integral() const {
    for (const auto& c : coords_)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<mpq_class> WeightVector::simple_root_coefficients() const {
    std::vector<mpq_class> out;
    out.reserve(coords_.size() - 1);
    mpq_class partial = 0;
    for (std::size_t i = 0; i + 1 < coords_.size(); ++i) {
        partial += coords_[i];
        out.push_back(partial);
    }
    return out;
}

std::string WeightVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
    os << ')';
    return os.str();
}

namespace {
void require_same_rank(const WeightVector& a, const WeightVector& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}
} // namespace

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    require_same_rank(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    require_same_rank(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator*=(const mpq_class& c) {
    for (auto& x : coords_) {
        x *= c;
        x.canonicalize();
    }
    return *this;
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || seen[x])
            throw std::invalid_argument("not a permutation of {1..n}");
        seen[x] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<int>(k) + 1;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int count = 0;
    for (std::size_t a = 0; a < images_.size(); ++a)
        for (std::size_t b = a + 1; b < images_.size(); ++b)
            if (images_[a] > images_[b]) ++count;
    return count;
}

bool Permutation::is_grassmannian(int r) const {
    for (int k = 1; k < size(); ++k) {
        if (k == r) continue;
        if ((*this)(k) > (*this)(k + 1)) return false;
    }
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int k = 1; k <= a.size(); ++k) out[k - 1] = a(b(k));
    return Permutation(std::move(out));
}

WeightVector simple_root(int i, int n) {
    if (i < 1 || i > n - 1) throw std::out_of_range("simple root index out of range");
    return root(i, i + 1, n);
}

WeightVector fundamental_weight(int r, int n) {
    if (r < 1 || r > n - 1) throw std::out_of_range("fundamental weight index out of range");
    std::vector<mpq_class> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[k] = k < r ? mpq_class(n - r, n) : mpq_class(-r, n);
    return WeightVector(std::move(v));
}

WeightVector root(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw std::out_of_range("root index out of range");
    std::vector<mpq_class> v(static_cast<std::size_t>(n), mpq_class(0));
    v[a - 1] = 1;
    v[b - 1] = -1;
    return WeightVector(std::move(v));
}

mpq_class coweight_pair(const WeightVector& mu, int j) {
    if (j < 1 || j > mu.rank() - 1) throw std::out_of_range("coweight index out of range");
    mpq_class sum = 0;
    for (int k = 1; k <= j; ++k) sum += mu[k];
    return sum;
}

WeightVector apply(const Permutation& w, const WeightVector& mu) {
    if (w.size() != mu.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<mpq_class> out(static_cast<std::size_t>(mu.rank()));
    for (int k = 1; k <= mu.rank(); ++k) out[w(k) - 1] = mu[k];
    return WeightVector(std::move(out));
}

Permutation word_to_permutation(const ReducedWord& word) {
    if (word.n < 1) throw std::invalid_argument("word rank must be positive");
    std::vector<int> images(static_cast<std::size_t>(word.n));
    std::iota(images.begin(), images.end(), 1);
    // Right-multiplying by s_a exchanges the values at positions a and a+1.
    for (int a : word.letters) {
        if (a < 1 || a > word.n - 1) throw std::out_of_range("word letter out of range");
        std::swap(images[a - 1], images[a]);
    }
    return Permutation(std::move(images));
}

bool is_reduced(const ReducedWord& word) {
    return word_to_permutation(word).length() == word.length();
}

std::vector<WeightVector> inversion_roots(const Permutation& w) {
    const int n = w.size();
    const Permutation inv = w.inverse();
    std::vector<WeightVector> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (inv(a) > inv(b)) out.push_back(root(a, b, n));
    return out;
}

} // namespace sgk
