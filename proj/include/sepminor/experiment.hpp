#pragma once

#include "sepminor/generators.hpp"
#include "sepminor/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sepminor {

enum class Quantity { SeparatorSize, NablaLower, NablaUpper, Treewidth };
std::string to_string(Quantity q);
Quantity parse_quantity(std::string_view name);

/// Methods accepted per quantity:
///   separator-size: exact | bfs-layer | recursive-bisection
///   nabla-lower:    greedy | slab | clique
///   nabla-upper:    bound
///   treewidth:      exact | minfill
bool method_valid(Quantity q, std::string_view method);

/// Whether a value is exact or only one side of the true quantity.
enum class Direction { Exact, Upper, Lower };
std::string to_string(Direction d);

struct ExperimentRecord {
    FamilySpec family;
    /// Vertex count of the measured instance.
    std::int64_t n = 0;
    /// Sweep coordinate: n for separator/treewidth, r for nabla quantities.
    std::int64_t x = 0;
    Quantity kind = Quantity::SeparatorSize;
    std::string method;
    Direction direction = Direction::Exact;
    std::optional<Rational> value;
    std::uint64_t seed = 0;
    double ms = 0;
    std::string error;

    [[nodiscard]] bool ok() const { return error.empty() && value.has_value(); }
};

/// Deterministic content equality (wall time excluded).
bool same_measurement(const ExperimentRecord& a, const ExperimentRecord& b);

/// One record per entry of `sizes` (ascending). For separator and treewidth
/// quantities the entries are family sizes; for nabla quantities they are
/// depths r and the family size is kept (slab and clique methods size their
/// own hosts from r). For separator and treewidth sweeps point i builds its
/// instance with seed derive_seed(seed, i); nabla sweeps keep spec.seed for
/// the host and pass `seed` to the greedy search at every depth, so values
/// are comparable across r. Per-point failures are recorded, never thrown.
std::vector<ExperimentRecord> run_family(const FamilySpec& spec, const std::vector<int>& sizes, Quantity kind,
                                         const std::string& method, std::uint64_t seed,
                                         const std::function<void(const ExperimentRecord&)>& on_record = {});

struct FitResult {
    double exponent = 0;
    double coefficient = 0;
    double r_squared = 0;
    double x_min = 0;
    double x_max = 0;
    int points = 0;
    /// "exact", "upper envelope" or "lower envelope".
    std::string envelope;
};

/// Least squares on (log x, log value) over records with a positive value.
/// Throws std::invalid_argument with fewer than 3 such points or when all
/// x coincide.
FitResult fit_exponent(const std::vector<ExperimentRecord>& records);
FitResult fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys);

inline constexpr const char* kCsvHeader = "family,params,n_or_r,kind,method,value_num,value_den,seed,ms";
std::string csv_row(const ExperimentRecord& r);
nlohmann::json record_to_json(const ExperimentRecord& r);
std::vector<ExperimentRecord> parse_csv_records(std::string_view text);

}  // namespace sepminor
