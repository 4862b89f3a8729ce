#ifndef GLUCAS_CONFIG_HPP
#define GLUCAS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glucas/multipoly.hpp"
#include "glucas/roots.hpp"
#include "glucas/sephull.hpp"

namespace glucas {

enum class ScenarioMode { GlPoly, GlEntire, GlSections, Rearrange, Stability, Corollary, SepHull };

const char* to_string(ScenarioMode m);

struct FamilyConfig {
    FamilyKind kind = FamilyKind::Parametric;
    std::vector<cplx> terms;          // explicit-list
    double alpha = 1.0;
    double c = 1.0;
    std::vector<cplx> phases{cplx(1.0)};
    ModulusIndexing indexing = ModulusIndexing::Shell;
    std::size_t count = 10000;
    std::size_t q = 0;
    std::optional<int> genus;         // estimated when absent
    std::size_t block_presentation = 0; // regroup each block phase-by-phase (0 = off)

    RootSequenceFamily build() const; // applies block presentation if set
    bool operator==(const FamilyConfig&) const = default;
};

struct AffineFormConfig {
    std::vector<cplx> coeffs; // one per variable
    cplx constant;
    bool operator==(const AffineFormConfig&) const = default;
};

struct MultiTermConfig {
    cplx coeff;
    std::vector<unsigned> exps;
    bool operator==(const MultiTermConfig&) const = default;
};

struct ScenarioConfig {
    std::string id = "scenario";
    ScenarioMode mode = ScenarioMode::GlPoly;
    std::uint64_t seed = 0;
    std::string out;

    std::optional<FamilyConfig> family;

    // [poly]
    std::vector<cplx> coeffs;  // ascending; exclusive with roots
    std::vector<cplx> roots;
    cplx leading{1.0, 0.0};

    // [multivariate]
    std::size_t vars = 1;
    std::vector<MultiTermConfig> terms;
    std::vector<AffineFormConfig> forms;
    std::vector<double> theta;
    std::size_t var = 0; // derivative / section coordinate (1-based in files)

    // [rearrange]
    std::size_t n_target = 2000;
    std::size_t window = 200;
    double target = 0.05;

    // [entire]
    std::vector<std::size_t> schedule;
    double bbox_half_width = 1e6;

    // [sections]
    std::size_t samples = 16;
    double sample_box = 2.0;

    // [sephull]
    std::vector<MultiPoint> points;
    std::vector<double> bbox; // lo hi per axis, 2M entries of pairs
    std::size_t resolution = 32;
    int pass_cap = 50;

    // [stability]
    int budget = 200;

    std::optional<double> eps; // defaults depend on mode

    double effective_eps() const;

    bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigDiagnostic {
    int line = 0;
    std::string message;
};

struct ParseResult {
    std::optional<ScenarioConfig> config;
    std::vector<ConfigDiagnostic> diagnostics;

    bool ok() const { return config.has_value(); }
};

ParseResult parse_config(const std::string& text);
std::string serialize_config(const ScenarioConfig& cfg);

} // namespace glucas

#endif
