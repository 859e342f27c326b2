#include "mcb/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "mcb/error.hpp"

namespace mcb {

namespace {

constexpr std::size_t word_count(std::size_t bits) {
    return (bits + Gf2Vector::kWordBits - 1) / Gf2Vector::kWordBits;
}

void require_same_length(const Gf2Vector& a, const Gf2Vector& b, const char* op) {
    if (a.size() != b.size()) {
        throw DimensionError(std::string(op) + ": length " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

} // namespace

Gf2Vector::Gf2Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

Gf2Vector Gf2Vector::unit(std::size_t length, std::size_t i) {
    Gf2Vector v(length);
    v.set(i);
    return v;
}

Gf2Vector Gf2Vector::from_indices(std::size_t length, std::span<const std::size_t> ones) {
    Gf2Vector v(length);
    for (auto i : ones) v.set(i);
    return v;
}

Gf2Vector Gf2Vector::from_indices(std::size_t length, std::initializer_list<std::size_t> ones) {
    return from_indices(length, std::span<const std::size_t>(ones.begin(), ones.size()));
}

bool Gf2Vector::test(std::size_t i) const {
    if (i >= length_) throw DimensionError("Gf2Vector::test: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Gf2Vector::set(std::size_t i, bool value) {
    if (i >= length_) throw DimensionError("Gf2Vector::set: index out of range");
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void Gf2Vector::flip(std::size_t i) {
    if (i >= length_) throw DimensionError("Gf2Vector::flip: index out of range");
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

bool Gf2Vector::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t Gf2Vector::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t Gf2Vector::lowest_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return npos;
}

std::vector<std::size_t> Gf2Vector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word w = words_[k];
        while (w != 0) {
            out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    require_same_length(*this, other, "xor");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

Gf2Vector& Gf2Vector::operator|=(const Gf2Vector& other) {
    require_same_length(*this, other, "or");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
}

std::string Gf2Vector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

bool inner_product(const Gf2Vector& u, const Gf2Vector& v) {
    require_same_length(u, v, "inner_product");
    auto a = u.words();
    auto b = v.words();
    Gf2Vector::Word acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
    return (std::popcount(acc) & 1) != 0;
}

std::strong_ordering lex_compare(const Gf2Vector& a, const Gf2Vector& b) {
    require_same_length(a, b, "lex_compare");
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) {
        const auto diff = wa[k] ^ wb[k];
        if (diff == 0) continue;
        const auto first = diff & (~diff + 1);
        return (wa[k] & first) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows), columns_(ncols, Gf2Vector(nrows)) {}

Gf2Matrix::Gf2Matrix(std::size_t nrows, std::vector<Gf2Vector> columns)
    : nrows_(nrows), columns_(std::move(columns)) {
    for (const auto& c : columns_) {
        if (c.size() != nrows_) throw DimensionError("Gf2Matrix: column length differs from row count");
    }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
    Gf2Matrix m(nrows, ncols);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DimensionError("Gf2Matrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (int bit : row) m.set(i, j++, bit != 0);
        ++i;
    }
    return m;
}

void Gf2Matrix::push_back(Gf2Vector column) {
    if (column.size() != nrows_) throw DimensionError("Gf2Matrix::push_back: column length differs from row count");
    columns_.push_back(std::move(column));
}

// ---------------------------------------------------------------------------

ColumnEchelon::ColumnEchelon(std::size_t nrows) : nrows_(nrows), slot_of_pivot_(nrows, Gf2Vector::npos) {}

std::size_t ColumnEchelon::reduce(Gf2Vector& v) const {
    auto words = v.words();
    std::size_t k = 0;
    while (true) {
        while (k < words.size() && words[k] == 0) ++k;
        if (k == words.size()) return Gf2Vector::npos;
        const std::size_t pivot = k * Gf2Vector::kWordBits + static_cast<std::size_t>(std::countr_zero(words[k]));
        const std::size_t slot = slot_of_pivot_[pivot];
        if (slot == Gf2Vector::npos) return pivot;
        // Stored vectors are zero below their pivot's word.
        auto src = basis_[slot].words();
        for (std::size_t t = k; t < words.size(); ++t) words[t] ^= src[t];
    }
}

bool ColumnEchelon::insert(const Gf2Vector& v) {
    if (v.size() != nrows_) throw DimensionError("ColumnEchelon::insert: length mismatch");
    if (basis_.size() == nrows_) return false;
    Gf2Vector r = v;
    const std::size_t pivot = reduce(r);
    if (pivot == Gf2Vector::npos) return false;
    slot_of_pivot_[pivot] = basis_.size();
    basis_.push_back(std::move(r));
    return true;
}

bool ColumnEchelon::in_span(const Gf2Vector& v) const {
    if (v.size() != nrows_) throw DimensionError("ColumnEchelon::in_span: length mismatch");
    Gf2Vector r = v;
    return reduce(r) == Gf2Vector::npos;
}

// ---------------------------------------------------------------------------

RankProfile column_rank_profile(const Gf2Matrix& m) {
    RankProfile profile;
    ColumnEchelon echelon(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (echelon.rank() == m.rows()) break;
        if (echelon.insert(m.col(j))) profile.indices.push_back(j);
    }
    return profile;
}

std::size_t rank(const Gf2Matrix& m) { return column_rank_profile(m).size(); }

std::vector<Gf2Vector> earliest_basis(const Gf2Matrix& m) {
    std::vector<Gf2Vector> out;
    for (auto j : column_rank_profile(m).indices) out.push_back(m.col(j));
    return out;
}

std::optional<Gf2Vector> in_span(const Gf2Matrix& basis, const Gf2Vector& v) {
    if (v.size() != basis.rows()) throw DimensionError("in_span: vector length differs from row count");

    // Pivoted reduced columns, each paired with the combination of input columns it equals.
    struct Row {
        Gf2Vector value;
        Gf2Vector combo;
    };
    std::vector<Row> reduced;
    std::vector<std::size_t> slot_of_pivot(basis.rows(), Gf2Vector::npos);

    auto reduce = [&](Gf2Vector& value, Gf2Vector& combo) {
        for (std::size_t p = value.lowest_set(); p != Gf2Vector::npos; p = value.lowest_set()) {
            const auto slot = slot_of_pivot[p];
            if (slot == Gf2Vector::npos) return p;
            value ^= reduced[slot].value;
            combo ^= reduced[slot].combo;
        }
        return Gf2Vector::npos;
    };

    for (std::size_t j = 0; j < basis.cols(); ++j) {
        Gf2Vector value = basis.col(j);
        Gf2Vector combo = Gf2Vector::unit(basis.cols(), j);
        const auto p = reduce(value, combo);
        if (p == Gf2Vector::npos) continue;
        slot_of_pivot[p] = reduced.size();
        reduced.push_back({std::move(value), std::move(combo)});
    }

    Gf2Vector target = v;
    Gf2Vector coefficients(basis.cols());
    if (reduce(target, coefficients) != Gf2Vector::npos) return std::nullopt;
    return coefficients;
}

Gf2Matrix invert(const Gf2Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("invert: matrix is not square");

    // Gauss-Jordan on rows of [M | I].
    std::vector<Gf2Vector> lhs(n, Gf2Vector(n));
    std::vector<Gf2Vector> rhs(n, Gf2Vector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (auto i : m.col(j).ones()) lhs[i].set(j);
    for (std::size_t i = 0; i < n; ++i) rhs[i].set(i);

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && !lhs[pivot].test(c)) ++pivot;
        if (pivot == n) throw SingularMatrixError("invert: matrix is singular");
        std::swap(lhs[pivot], lhs[c]);
        std::swap(rhs[pivot], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && lhs[r].test(c)) {
                lhs[r] ^= lhs[c];
                rhs[r] ^= rhs[c];
            }
        }
    }

    Gf2Matrix inverse(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : rhs[i].ones()) inverse.set(i, j);
    return inverse;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (auto k : b.col(j).ones()) out.col(j) ^= a.col(k);
    return out;
}

Gf2Matrix transpose(const Gf2Matrix& m) {
    Gf2Matrix out(m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (auto i : m.col(j).ones()) out.set(j, i);
    return out;
}

} // namespace mcb
