#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace zzp {

/// Dense vector over Z/2.
using Bits = boost::dynamic_bitset<>;

inline Bits unit_vector(std::size_t n, std::size_t i) {
    Bits b(n);
    b.set(i);
    return b;
}

/// Incremental row echelon basis over Z/2. Each stored row carries a tag
/// vector; reduction accumulates the tags of the rows it uses, so the tag of
/// a vector that reduces to zero expresses it in terms of inserted vectors.
class Echelon {
public:
    Echelon(std::size_t width, std::size_t tag_width) : width_(width), tag_width_(tag_width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const Bits& row(std::size_t r) const { return rows_[r]; }
    std::size_t pivot(std::size_t r) const { return pivot_[r]; }

    /// Reduces v in place; returns true iff v reduced to zero.
    bool reduce(Bits& v, Bits& tag) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v.test(pivot_[r])) {
                v ^= rows_[r];
                tag ^= tags_[r];
            }
        return v.none();
    }

    bool reduce(Bits& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v.test(pivot_[r])) v ^= rows_[r];
        return v.none();
    }

    bool contains(Bits v) const { return reduce(v); }

    /// Inserts v unless it is already in the span. Returns false in that
    /// case, leaving tag holding the dependency (tag ^ Σ tags used).
    bool insert(Bits v, Bits& tag) {
        if (reduce(v, tag)) return false;
        pivot_.push_back(v.find_first());
        rows_.push_back(std::move(v));
        tags_.push_back(tag);
        return true;
    }

    bool insert(Bits v) {
        Bits tag(tag_width_);
        return insert(std::move(v), tag);
    }

    /// Solves Σ x_k inserted_k = v when every inserted vector was given its
    /// unit tag e_k. Returns nullopt if v is outside the span.
    std::optional<Bits> solve(Bits v) const {
        Bits tag(tag_width_);
        if (!reduce(v, tag)) return std::nullopt;
        return tag;
    }

private:
    std::size_t width_;
    std::size_t tag_width_;
    std::vector<Bits> rows_;
    std::vector<Bits> tags_;
    std::vector<std::size_t> pivot_;
};

}  // namespace zzp
