#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dexsym/algebra.hpp"

namespace dexsym::catalog {

/// Admissible values for one parameter slot.
struct ParamDomain {
    enum class Kind { AnyRational, Excluding, Finite, IntegerAtLeast };
    Kind kind = Kind::AnyRational;
    std::vector<mpq_class> values;  // excluded or allowed values
    long min_value = 0;             // for IntegerAtLeast
    bool admits(const mpq_class& v) const;
    std::string str() const;
};

struct ParamSpec {
    std::string name;
    ParamDomain domain;
    mpq_class default_value;
};

/// Properties an entry is documented to have, checked by the verification
/// suite against the computed ones.
struct ExpectedProperties {
    bool dextral = false;
    bool solvable = false;
    bool left_nilpotent = false;
    std::optional<std::size_t> left_index;
    bool right_nilpotent = false;
    std::optional<std::string> nilradical;
    /// Pinned refutation shape (basis indices a, b, c), where the
    /// classification argument names one.
    std::optional<std::array<std::size_t, 3>> witness_pattern;
    std::string claim;
};

using ParamMap = std::map<std::string, mpq_class>;

struct SymbolicProduct {
    std::string left, right;
    std::vector<std::pair<mpq_class, std::string>> value;
};

struct CatalogEntry {
    std::string id;
    std::vector<ParamSpec> params;
    FieldSpec default_field = FieldSpec::rational();
    std::optional<unsigned long> required_char;
    std::string notes;
    std::function<std::vector<std::string>(const ParamMap&)> basis;
    std::function<std::vector<SymbolicProduct>(const ParamMap&)> products;
    ExpectedProperties expected;
};

/// Entry ids in catalog order.
const std::vector<std::string>& list();
/// Entry by id; unknown ids are an error.
const CatalogEntry& get(const std::string& id);
const ExpectedProperties& expected(const std::string& id);

/// Fully numeric table at the given parameters and field. Missing
/// parameters take their defaults; out-of-domain values, unknown parameter
/// names, inadmissible characteristic, and non-embedding coefficients are
/// errors.
AlgebraTable instantiate(const std::string& id, const ParamMap& params = {},
                         std::optional<FieldSpec> field = std::nullopt);

/// Default instantiation (default parameters, default field).
AlgebraTable default_instance(const std::string& id);

/// Admissible sample values for every parameter of an entry, drawn from
/// the given base set (integer parameters get a small positive range).
std::vector<ParamMap> sample_params(const std::string& id,
                                    const std::vector<mpq_class>& base_samples);

}  // namespace dexsym::catalog
