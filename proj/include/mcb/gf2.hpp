#ifndef MCB_GF2_HPP_
#define MCB_GF2_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mcb {

/**
 * Dense bit-packed vector over GF(2).
 *
 * Coordinate i lives in word i / 64, bit i % 64. Bits past size() are kept
 * zero so that word-wise equality, hashing and comparison are exact.
 */
class Gf2Vector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t length);

    static Gf2Vector unit(std::size_t length, std::size_t i);
    static Gf2Vector from_indices(std::size_t length, std::span<const std::size_t> ones);
    static Gf2Vector from_indices(std::size_t length, std::initializer_list<std::size_t> ones);

    std::size_t size() const noexcept { return length_; }

    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool any() const noexcept;
    bool none() const noexcept { return !any(); }
    std::size_t count() const noexcept;

    /// Index of the lowest set coordinate, or npos for the zero vector.
    std::size_t lowest_set() const noexcept;
    std::vector<std::size_t> ones() const;

    Gf2Vector& operator^=(const Gf2Vector& other);
    Gf2Vector& operator|=(const Gf2Vector& other);

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    /// "0110..." with coordinate 0 first.
    std::string to_string() const;

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

inline Gf2Vector operator^(Gf2Vector lhs, const Gf2Vector& rhs) { return lhs ^= rhs; }

/// Parity of the overlap of u and v.
bool inner_product(const Gf2Vector& u, const Gf2Vector& v);

/// u += v over GF(2).
inline void add_assign(Gf2Vector& u, const Gf2Vector& v) { u ^= v; }

/**
 * Compares two equal-length vectors as bit strings read from coordinate 0.
 * The first coordinate where they differ decides; the vector holding a 1
 * there is the greater one.
 */
std::strong_ordering lex_compare(const Gf2Vector& a, const Gf2Vector& b);

/// Column-major matrix over GF(2). Column order is significant.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t nrows, std::size_t ncols);
    Gf2Matrix(std::size_t nrows, std::vector<Gf2Vector> columns);

    static Gf2Matrix identity(std::size_t n);
    /// Builds from row-major 0/1 literals; handy in tests.
    static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const noexcept { return nrows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    const Gf2Vector& col(std::size_t j) const { return columns_.at(j); }
    Gf2Vector& col(std::size_t j) { return columns_.at(j); }
    std::span<const Gf2Vector> columns() const noexcept { return columns_; }

    bool operator()(std::size_t i, std::size_t j) const { return columns_.at(j).test(i); }
    void set(std::size_t i, std::size_t j, bool value = true) { columns_.at(j).set(i, value); }

    void push_back(Gf2Vector column);

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t nrows_ = 0;
    std::vector<Gf2Vector> columns_;
};

/// Column indices of the lexicographically smallest maximal independent column set.
struct RankProfile {
    std::vector<std::size_t> indices;

    std::size_t size() const noexcept { return indices.size(); }
    friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/**
 * Incremental column elimination. Each stored vector is reduced so that its
 * lowest set bit (its pivot) is unique among stored vectors; reducing a
 * candidate therefore strictly raises its lowest set bit at every step.
 */
class ColumnEchelon {
public:
    explicit ColumnEchelon(std::size_t nrows);

    /// Adds v if it is independent of everything inserted so far.
    bool insert(const Gf2Vector& v);
    bool in_span(const Gf2Vector& v) const;

    std::size_t rank() const noexcept { return basis_.size(); }
    std::size_t nrows() const noexcept { return nrows_; }

private:
    // Reduces v in place; returns its final pivot or npos when v reduced to zero.
    std::size_t reduce(Gf2Vector& v) const;

    std::size_t nrows_;
    std::vector<Gf2Vector> basis_;
    std::vector<std::size_t> slot_of_pivot_;
};

std::size_t rank(const Gf2Matrix& m);
RankProfile column_rank_profile(const Gf2Matrix& m);
std::vector<Gf2Vector> earliest_basis(const Gf2Matrix& m);

/// Solves basis * c = v. Empty optional when v is outside the column span.
std::optional<Gf2Vector> in_span(const Gf2Matrix& basis, const Gf2Vector& v);

Gf2Matrix invert(const Gf2Matrix& m);
Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix transpose(const Gf2Matrix& m);

inline Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) { return mat_mul(a, b); }

} // namespace mcb

#endif // MCB_GF2_HPP_
