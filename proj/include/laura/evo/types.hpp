#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "laura/wsn/model.hpp"

namespace laura::evo {

/// An unvalidated routing proposal, typically parsed from generator output.
/// The claimed objective is optional; generators that do not self-report
/// simply omit it.
struct CandidateIndividual {
    std::vector<wsn::NodeId> route_claim;
    std::optional<double> omega_claim;
};

enum class FaultKind {
    BadEndpoints,
    MissingNode,
    DuplicateNode,
    WrongLength,
    ObjectiveMismatch,
    Unparseable,
};

inline std::string_view to_string(FaultKind kind) {
    switch (kind) {
        case FaultKind::BadEndpoints: return "BadEndpoints";
        case FaultKind::MissingNode: return "MissingNode";
        case FaultKind::DuplicateNode: return "DuplicateNode";
        case FaultKind::WrongLength: return "WrongLength";
        case FaultKind::ObjectiveMismatch: return "ObjectiveMismatch";
        case FaultKind::Unparseable: return "Unparseable";
    }
    return "Unknown";
}

/// A rejected verification check. The detail names the offending node or
/// value; it is embedded verbatim in retry prompts, so the wording is stable.
struct VerificationError {
    FaultKind kind;
    std::string detail;
};

/// A verified route paired with its locally recomputed maximum AoI.
struct Individual {
    wsn::Route route;
    double omega = 0.0;
};

/// Fixed-capacity elitist set of individuals. Members are kept in admission
/// order; mutation happens only through the owning engine loop.
class Population {
public:
    explicit Population(std::size_t capacity) : capacity_(capacity) {
        if (capacity == 0) throw std::invalid_argument("Population: capacity must be at least 1");
    }

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool full() const { return members_.size() >= capacity_; }

    const Individual& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Individual>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Adds a member while below capacity (initialization fill).
    void add(Individual individual) {
        if (full()) throw std::logic_error("Population: at capacity, use admit_and_truncate");
        members_.push_back(std::move(individual));
    }

private:
    std::vector<Individual> members_;
    std::size_t capacity_;

    friend void admit_and_truncate(Population& population, Individual newcomer);
};

} // namespace laura::evo
