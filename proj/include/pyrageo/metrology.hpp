#pragma once

// Monument measurements and the quantitative claims made about them.
//
// A claim compares two expressions written in the construction-script
// expression language, extended with `monument.dimension[source]`
// references into a Dataset. The right-hand side is the geometric ideal,
// so rel_err = |lhs - rhs| / |rhs|.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pyrageo::metrology {

enum class Unit { Meter, Cubit };

std::string to_string(Unit u);
// Accepts "meter"/"m" and "cubit"/"c". Throws std::invalid_argument.
Unit parse_unit(const std::string& s);

inline constexpr double kDefaultCubitInMeters = 0.5235;
// A claim passes iff rel_err <= claimed_rel_err * kPassSlack.
inline constexpr double kPassSlack = 1.5;

double convert(double value, Unit from, Unit to, double cubit_in_meters = kDefaultCubitInMeters);

// Schema or content problem in an input file; the message names the file and
// the offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Measurement {
    std::string monument;
    std::string dimension;
    double value = 0.0;
    Unit unit = Unit::Meter;
    std::string source;
    std::string paper_ref;
};

class Dataset {
public:
    explicit Dataset(double cubit_in_meters = kDefaultCubitInMeters);

    // Throws InputError on a non-positive value, empty source or a duplicate
    // (monument, dimension, source, unit) key.
    void add(Measurement m);

    double cubit_in_meters() const { return cubit_in_meters_; }
    const std::vector<Measurement>& measurements() const { return measurements_; }

    const Measurement* find(const std::string& monument, const std::string& dimension, const std::string& source,
                            Unit unit) const;
    // Sources that record (monument, dimension) in any unit, sorted.
    std::vector<std::string> sources_for(const std::string& monument, const std::string& dimension) const;
    // Value in `unit`, converting from the other unit when only that one is
    // recorded for the source.
    std::optional<double> value_in(const std::string& monument, const std::string& dimension,
                                   const std::string& source, Unit unit) const;

private:
    double cubit_in_meters_;
    std::vector<Measurement> measurements_;
};

struct Claim {
    std::string id;
    std::string description;
    std::string lhs;
    std::string rhs;
    Unit unit_system = Unit::Cubit;
    double claimed_rel_err = 0.0;
    // "monument" or "monument.dimension" -> source, used when a reference
    // omits its [source].
    std::map<std::string, std::string> source_bindings;
    std::string paper_ref;
};

struct ClaimResult {
    std::string claim_id;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double rel_err = 0.0;
    double claimed_rel_err = 0.0;
    bool pass = false;
    double margin = 0.0;  // claimed_rel_err * slack - rel_err
    std::optional<std::string> error;
};

// Throws InputError for a missing measurement (naming the key), an
// unparsable expression or a zero right-hand side.
ClaimResult evaluate_claim(const Claim& claim, const Dataset& data);

struct SuiteReport {
    std::vector<ClaimResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errored = 0;

    bool all_pass() const { return failed == 0 && errored == 0; }
};

// Evaluates in declaration order; a claim that cannot be evaluated is
// recorded with its error and counted in `errored`.
SuiteReport run_suite(std::span<const Claim> claims, const Dataset& data);

// JSON input. `origin` is used in error messages (usually the file path).
Dataset parse_dataset_json(const std::string& text, const std::string& origin);
std::vector<Claim> parse_claims_json(const std::string& text, const std::string& origin);

std::string format_text(const SuiteReport& report);
std::string format_csv(const SuiteReport& report);
std::string format_json(const SuiteReport& report);

}  // namespace pyrageo::metrology
