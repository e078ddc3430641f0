#include "odrl/relation.hpp"

#include <algorithm>

namespace odrl {

std::size_t ConceptSet::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

ConceptSet& ConceptSet::operator&=(const ConceptSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && other.bits_[i];
    return *this;
}

ConceptSet& ConceptSet::operator|=(const ConceptSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] || other.bits_[i];
    return *this;
}

ConceptSet ConceptSet::complement() const {
    ConceptSet out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
    return out;
}

bool ConceptSet::subset_of(const ConceptSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

std::vector<ConceptIndex> ConceptSet::members() const {
    std::vector<ConceptIndex> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(static_cast<ConceptIndex>(i));
    }
    return out;
}

void Relation::make_reflexive() {
    for (std::size_t i = 0; i < n_; ++i) bits_[i * n_ + i] = true;
}

void Relation::make_symmetric() {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            bool v = bits_[i * n_ + j] || bits_[j * n_ + i];
            bits_[i * n_ + j] = v;
            bits_[j * n_ + i] = v;
        }
    }
}

void Relation::make_transitive() {
    for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!bits_[i * n_ + k]) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (bits_[k * n_ + j]) bits_[i * n_ + j] = true;
            }
        }
    }
}

std::vector<std::pair<ConceptIndex, ConceptIndex>> Relation::pairs() const {
    std::vector<std::pair<ConceptIndex, ConceptIndex>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (bits_[i * n_ + j]) {
                out.emplace_back(static_cast<ConceptIndex>(i), static_cast<ConceptIndex>(j));
            }
        }
    }
    return out;
}

}  // namespace odrl
