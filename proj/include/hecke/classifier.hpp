#pragma once

// Semisimple / finite / infinite representation type of Hecke algebras of
// finite Weyl groups, and of their group algebras at q = 1.

#include "hecke/weyl_types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hecke {

enum class Status {
    Semisimple,
    FiniteNotSemisimple,
    /// Finite representation type, semisimplicity not decided.
    Finite,
    Infinite,
};

/// Theorem < Derived < Conjectural; a report's overall basis is the weakest
/// basis among its factors.
enum class Basis { Theorem, Derived, Conjectural };

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Basis b) noexcept;
Status parse_status(std::string_view s);

struct QIsOne {
    friend bool operator==(const QIsOne&, const QIsOne&) = default;
};
struct RootOfUnity {
    unsigned e = 2;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};
using Parameter = std::variant<QIsOne, RootOfUnity>;

/// Second parameter Q of the type-B Hecke algebra, (T_0 + 1)(T_0 - Q) = 0.
struct EqualQ {
    friend bool operator==(const EqualQ&, const EqualQ&) = default;
};
struct QOne {
    friend bool operator==(const QOne&, const QOne&) = default;
};
/// Q is not of the form -q^f.
struct GenericQ {
    friend bool operator==(const GenericQ&, const GenericQ&) = default;
};
/// -Q = q^f with 0 <= f < e.
struct MinusPowerF {
    unsigned f = 0;
    friend bool operator==(const MinusPowerF&, const MinusPowerF&) = default;
};
using BParameter = std::variant<EqualQ, QOne, GenericQ, MinusPowerF>;

/// Input rejected before classification.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A dihedral factor I2(m), m not in {3,4,6}, in a q = 1 classification.
class NonWeylFactor : public ValidationError {
public:
    using ValidationError::ValidationError;
};

struct ClassificationInput {
    WeylSpec spec;
    /// 0 or a prime.
    std::uint64_t characteristic = 0;
    Parameter parameter = RootOfUnity{2};
    /// Applies to every type-B factor.
    BParameter b_parameter = EqualQ{};
};

/// Throws ValidationError on inconsistent input.
void validate(const ClassificationInput& in);

struct FactorVerdict {
    IrreducibleType factor;
    Status status;
    /// Multiplicity of the primitive e-th root of unity in P_W (q != 1 only).
    std::optional<unsigned> multiplicity;
    std::string criterion;
    Basis basis;
};

struct ClassificationReport {
    ClassificationInput input;
    std::vector<FactorVerdict> factors;
    Status overall = Status::Semisimple;
    Basis overall_basis = Basis::Theorem;
};

struct OneParamVerdict {
    Status status;
    unsigned multiplicity;
    Basis basis;
    std::string criterion;
};

/// One-parameter Hecke algebra at q of order e >= 2: multiplicity 0, 1, >= 2
/// of Phi_e in P_W means semisimple, finite non-semisimple, infinite.
OneParamVerdict classify_one_param_irreducible(const IrreducibleType& t, unsigned e);

/// Closed-form finiteness thresholds for A, B and D, independent of the
/// polynomial route. Throws std::invalid_argument for other families.
bool threshold_finite(const IrreducibleType& t, unsigned e);

struct TwoParamVerdict {
    Status status;
    Basis basis;
    std::string criterion;
    /// Q after normalization: EqualQ and QOne become GenericQ or MinusPowerF.
    BParameter normalized;
};

/// Two-parameter Hecke algebra of type B_n.
TwoParamVerdict classify_two_param_B(unsigned n, unsigned e, const BParameter& q);

/// Group algebra KW in characteristic l (0 or prime).
ClassificationReport classify_group_algebra(const WeylSpec& spec, std::uint64_t l);

/// Product rule: at most one non-semisimple factor keeps finite type.
Status combine_factors(std::span<const Status> statuses);

ClassificationReport classify(const ClassificationInput& in);

/// Dimensions of the terms of a minimal projective resolution, t = 0, 1, ...
/// Every value is at least 1.
class DimensionSequence {
public:
    DimensionSequence() = default;
    explicit DimensionSequence(std::vector<std::uint64_t> values);

    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::uint64_t operator[](std::size_t t) const { return values_[t]; }

private:
    std::vector<std::uint64_t> values_;
};

/// c_t = sum_{s=0}^{t} a_s b_{t-s} over the common prefix.
DimensionSequence kunneth_convolve(const DimensionSequence& a, const DimensionSequence& b);

struct ComplexityOptions {
    /// The ratios r_t = seq_t / (t+1)^{s-1} count as bounded when their
    /// maximum over the second half of the prefix is at most this factor
    /// times their maximum over the first half.
    double growth_tolerance = 1.5;
    unsigned max_complexity = 32;
};

/// Finite-prefix estimate of the complexity. An empty resolution (projective
/// module) gives 0. A nonempty prefix gives the smallest s >= 1 whose ratio
/// sequence looks bounded under the options; complexity is an asymptotic
/// notion, so this is only an estimate.
unsigned complexity_upper_bound(const DimensionSequence& seq, const ComplexityOptions& opts = {});

} // namespace hecke
