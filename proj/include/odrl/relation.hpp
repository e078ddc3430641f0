#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace odrl {

using ConceptIndex = std::uint32_t;

// Dense membership vector over the concepts of one knowledge base.
class ConceptSet {
public:
    ConceptSet() = default;
    explicit ConceptSet(std::size_t universe, bool filled = false) : bits_(universe, filled) {}

    std::size_t universe() const { return bits_.size(); }
    bool contains(ConceptIndex i) const { return bits_[i]; }
    void insert(ConceptIndex i) { bits_[i] = true; }
    void erase(ConceptIndex i) { bits_[i] = false; }

    std::size_t size() const;
    bool empty() const { return size() == 0; }

    ConceptSet& operator&=(const ConceptSet& other);
    ConceptSet& operator|=(const ConceptSet& other);
    ConceptSet complement() const;
    bool subset_of(const ConceptSet& other) const;

    std::vector<ConceptIndex> members() const;

    friend bool operator==(const ConceptSet&, const ConceptSet&) = default;

private:
    std::vector<bool> bits_;
};

// Square boolean matrix over concept indices.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}

    std::size_t dimension() const { return n_; }
    bool test(ConceptIndex x, ConceptIndex y) const { return bits_[x * n_ + y]; }
    void set(ConceptIndex x, ConceptIndex y, bool value = true) { bits_[x * n_ + y] = value; }

    void make_reflexive();
    void make_symmetric();
    // Warshall; leaves the relation transitively closed.
    void make_transitive();

    std::vector<std::pair<ConceptIndex, ConceptIndex>> pairs() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> bits_;
};

}  // namespace odrl
