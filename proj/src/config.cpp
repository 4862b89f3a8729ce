#include "glucas/config.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace glucas {

const char* to_string(ScenarioMode m) {
    switch (m) {
        case ScenarioMode::GlPoly: return "gl-poly";
        case ScenarioMode::GlEntire: return "gl-entire";
        case ScenarioMode::GlSections: return "gl-sections";
        case ScenarioMode::Rearrange: return "rearrange";
        case ScenarioMode::Stability: return "stability";
        case ScenarioMode::Corollary: return "corollary";
        default: return "sep-hull";
    }
}

double ScenarioConfig::effective_eps() const {
    if (eps) return *eps;
    switch (mode) {
        case ScenarioMode::GlEntire: return 1e-3;
        default: return 1e-7;
    }
}

RootSequenceFamily FamilyConfig::build() const {
    RootSequenceFamily base =
        (kind == FamilyKind::ExplicitList)
            ? RootSequenceFamily::explicit_list(terms)
            : RootSequenceFamily::parametric(alpha, c, phases, count, indexing);
    if (block_presentation == 0) return base;
    // Regroup consecutive blocks phase-by-phase: for the paired family this
    // yields the "positives first in blocks of B" presentation.
    const std::size_t k = (kind == FamilyKind::ExplicitList) ? 1 : phases.size();
    const std::size_t b = block_presentation;
    std::vector<cplx> presented;
    presented.reserve(base.size());
    std::size_t start = 1;
    while (start <= base.size()) {
        std::size_t end = std::min(base.size(), start + b * k - 1);
        for (std::size_t ph = 0; ph < k; ++ph) {
            for (std::size_t n = start; n <= end; ++n) {
                if ((n - 1) % k == ph) presented.push_back(base.nth_root(n));
            }
        }
        start = end + 1;
    }
    return RootSequenceFamily::explicit_list(std::move(presented));
}

namespace {

struct Parser {
    ScenarioConfig cfg;
    std::vector<ConfigDiagnostic> diags;
    std::string section;
    bool skipping_section = false; // inside an unknown section, already diagnosed
    int line = 0;
    bool family_touched = false;

    void error(const std::string& msg) { diags.push_back({line, msg}); }

    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    bool parse_complex(const std::string& tok, cplx& out) {
        if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') return false;
        auto comma = tok.find(',');
        if (comma == std::string::npos) return false;
        try {
            std::size_t used = 0;
            std::string re_s = tok.substr(1, comma - 1);
            std::string im_s = tok.substr(comma + 1, tok.size() - comma - 2);
            double re = std::stod(re_s, &used);
            if (used != re_s.size()) return false;
            double im = std::stod(im_s, &used);
            if (used != im_s.size()) return false;
            out = cplx(re, im);
            return true;
        } catch (...) {
            return false;
        }
    }

    bool parse_complex_list(const std::string& v, std::vector<cplx>& out) {
        std::istringstream is(v);
        std::string tok;
        out.clear();
        while (is >> tok) {
            cplx z;
            if (!parse_complex(tok, z)) {
                error("expected complex value '(re,im)', got '" + tok + "'");
                return false;
            }
            out.push_back(z);
        }
        if (out.empty()) {
            error("empty complex list");
            return false;
        }
        return true;
    }

    template <typename T>
    bool parse_num(const std::string& v, T& out) {
        std::istringstream is(v);
        if (!(is >> out)) {
            error("bad numeric value '" + v + "'");
            return false;
        }
        std::string rest;
        if (is >> rest) {
            error("trailing text after value: '" + rest + "'");
            return false;
        }
        return true;
    }

    void handle(const std::string& key, const std::string& value) {
        if (skipping_section) return;
        if (section == "scenario") return handle_scenario(key, value);
        if (section == "family") return handle_family(key, value);
        if (section == "poly") return handle_poly(key, value);
        if (section == "multivariate") return handle_multivariate(key, value);
        if (section == "rearrange") return handle_rearrange(key, value);
        if (section == "entire") return handle_entire(key, value);
        if (section == "sections") return handle_sections(key, value);
        if (section == "sephull") return handle_sephull(key, value);
        if (section == "stability") return handle_stability(key, value);
        error("key outside any known section");
    }

    void handle_scenario(const std::string& key, const std::string& value) {
        if (key == "id") cfg.id = value;
        else if (key == "mode") {
            if (value == "gl-poly") cfg.mode = ScenarioMode::GlPoly;
            else if (value == "gl-entire") cfg.mode = ScenarioMode::GlEntire;
            else if (value == "gl-sections") cfg.mode = ScenarioMode::GlSections;
            else if (value == "rearrange") cfg.mode = ScenarioMode::Rearrange;
            else if (value == "stability") cfg.mode = ScenarioMode::Stability;
            else if (value == "corollary") cfg.mode = ScenarioMode::Corollary;
            else if (value == "sep-hull") cfg.mode = ScenarioMode::SepHull;
            else error("unknown mode '" + value + "'");
        } else if (key == "seed") {
            parse_num(value, cfg.seed);
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "eps") {
            double e;
            if (parse_num(value, e)) {
                if (e < 0.0) error("eps >= 0 required");
                else cfg.eps = e;
            }
        } else error("unknown key '" + key + "' in [scenario]");
    }

    FamilyConfig& fam() {
        if (!cfg.family) cfg.family.emplace();
        return *cfg.family;
    }

    void handle_family(const std::string& key, const std::string& value) {
        family_touched = true;
        if (key == "kind") {
            if (value == "parametric") fam().kind = FamilyKind::Parametric;
            else if (value == "explicit") fam().kind = FamilyKind::ExplicitList;
            else error("kind must be 'parametric' or 'explicit'");
        } else if (key == "alpha") {
            double a;
            if (parse_num(value, a)) {
                if (a < 0.0) error("alpha >= 0 required");
                else fam().alpha = a;
            }
        } else if (key == "c") {
            double c;
            if (parse_num(value, c)) {
                if (c <= 0.0) error("c > 0 required");
                else fam().c = c;
            }
        } else if (key == "phases") {
            std::vector<cplx> ph;
            if (parse_complex_list(value, ph)) {
                for (cplx z : ph) {
                    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
                        error("phase entries must have modulus 1");
                        return;
                    }
                }
                fam().phases = std::move(ph);
            }
        } else if (key == "indexing") {
            if (value == "shell") fam().indexing = ModulusIndexing::Shell;
            else if (value == "direct") fam().indexing = ModulusIndexing::Direct;
            else error("indexing must be 'shell' or 'direct'");
        } else if (key == "count") {
            std::size_t n;
            if (parse_num(value, n)) {
                if (n < 1) error("count >= 1 required");
                else fam().count = n;
            }
        } else if (key == "q") {
            parse_num(value, fam().q);
        } else if (key == "genus") {
            int g;
            if (parse_num(value, g)) {
                if (g < 0) error("genus >= 0 required");
                else fam().genus = g;
            }
        } else if (key == "blocks") {
            parse_num(value, fam().block_presentation);
        } else if (key == "root") {
            cplx z;
            if (parse_complex(value, z)) {
                if (z == cplx(0.0)) error("explicit roots must be non-zero");
                else fam().terms.push_back(z);
            } else error("expected complex value '(re,im)'");
        } else error("unknown key '" + key + "' in [family]");
    }

    void handle_poly(const std::string& key, const std::string& value) {
        if (key == "coeffs") parse_complex_list(value, cfg.coeffs);
        else if (key == "roots") parse_complex_list(value, cfg.roots);
        else if (key == "leading") {
            cplx z;
            if (!parse_complex(value, z)) error("expected complex value '(re,im)'");
            else if (z == cplx(0.0)) error("leading coefficient must be non-zero");
            else cfg.leading = z;
        } else error("unknown key '" + key + "' in [poly]");
    }

    void handle_multivariate(const std::string& key, const std::string& value) {
        if (key == "vars") {
            std::size_t v;
            if (parse_num(value, v)) {
                if (v < 1) error("vars >= 1 required");
                else cfg.vars = v;
            }
        } else if (key == "term") {
            std::istringstream is(value);
            std::string tok;
            if (!(is >> tok)) return error("term needs a coefficient");
            MultiTermConfig t;
            if (!parse_complex(tok, t.coeff)) return error("term coefficient must be '(re,im)'");
            long e;
            while (is >> e) {
                if (e < 0) return error("exponents must be non-negative");
                t.exps.push_back(static_cast<unsigned>(e));
            }
            cfg.terms.push_back(std::move(t));
        } else if (key == "form") {
            std::vector<cplx> vals;
            if (parse_complex_list(value, vals)) {
                if (vals.size() < 2) return error("form needs per-variable coefficients plus a constant");
                AffineFormConfig f;
                f.constant = vals.back();
                vals.pop_back();
                f.coeffs = std::move(vals);
                cfg.forms.push_back(std::move(f));
            }
        } else if (key == "var") {
            std::size_t v;
            if (parse_num(value, v)) {
                if (v < 1) error("var is 1-based");
                else cfg.var = v - 1;
            }
        } else error("unknown key '" + key + "' in [multivariate]");
    }

    void handle_rearrange(const std::string& key, const std::string& value) {
        if (key == "n_target") {
            if (parse_num(value, cfg.n_target) && cfg.n_target < 1) error("n_target >= 1 required");
        } else if (key == "window") {
            if (parse_num(value, cfg.window) && cfg.window < 1) error("window >= 1 required");
        } else if (key == "target") {
            if (parse_num(value, cfg.target) && cfg.target <= 0.0) error("target > 0 required");
        } else error("unknown key '" + key + "' in [rearrange]");
    }

    void handle_entire(const std::string& key, const std::string& value) {
        if (key == "schedule") {
            std::istringstream is(value);
            std::vector<std::size_t> sch;
            std::size_t n;
            while (is >> n) sch.push_back(n);
            if (sch.empty()) return error("schedule needs at least one truncation");
            for (std::size_t i = 1; i < sch.size(); ++i) {
                if (sch[i] <= sch[i - 1]) return error("schedule must be strictly increasing");
            }
            cfg.schedule = std::move(sch);
        } else if (key == "bbox") {
            double b;
            if (parse_num(value, b)) {
                if (b <= 0.0) error("bbox half-width must be positive");
                else cfg.bbox_half_width = b;
            }
        } else error("unknown key '" + key + "' in [entire]");
    }

    void handle_sections(const std::string& key, const std::string& value) {
        if (key == "samples") {
            if (parse_num(value, cfg.samples) && cfg.samples < 1) error("samples >= 1 required");
        } else if (key == "box") {
            double b;
            if (parse_num(value, b)) {
                if (b <= 0.0) error("sample box must be positive");
                else cfg.sample_box = b;
            }
        } else error("unknown key '" + key + "' in [sections]");
    }

    void handle_sephull(const std::string& key, const std::string& value) {
        if (key == "point") {
            std::vector<cplx> zs;
            if (parse_complex_list(value, zs)) cfg.points.push_back(to_multipoint(zs));
        } else if (key == "bbox") {
            std::istringstream is(value);
            std::vector<double> b;
            double x;
            while (is >> x) b.push_back(x);
            if (b.empty() || b.size() % 2 != 0) return error("bbox needs lo/hi pairs per axis");
            for (std::size_t i = 0; i < b.size(); i += 2) {
                if (!(b[i] < b[i + 1])) return error("bbox axis lo < hi required");
            }
            cfg.bbox = std::move(b);
        } else if (key == "resolution") {
            if (parse_num(value, cfg.resolution) && cfg.resolution < 4) {
                error("resolution >= 4 required");
            }
        } else if (key == "cap") {
            if (parse_num(value, cfg.pass_cap) && cfg.pass_cap < 1) error("cap >= 1 required");
        } else error("unknown key '" + key + "' in [sephull]");
    }

    void handle_stability(const std::string& key, const std::string& value) {
        if (key == "budget") {
            if (parse_num(value, cfg.budget) && cfg.budget < 1) error("budget >= 1 required");
        } else if (key == "theta") {
            std::istringstream is(value);
            std::vector<double> th;
            double a;
            while (is >> a) th.push_back(a);
            if (th.empty()) return error("theta needs at least one angle");
            cfg.theta = std::move(th);
        } else error("unknown key '" + key + "' in [stability]");
    }

    void finish() {
        switch (cfg.mode) {
            case ScenarioMode::GlPoly:
                if (cfg.coeffs.empty() && cfg.roots.empty()) {
                    diags.push_back({0, "gl-poly requires [poly] coeffs or roots"});
                }
                break;
            case ScenarioMode::GlEntire:
            case ScenarioMode::Rearrange:
                if (!cfg.family) {
                    diags.push_back({0, std::string(to_string(cfg.mode)) + " requires [family]"});
                }
                break;
            case ScenarioMode::GlSections:
                if (cfg.terms.empty() && cfg.forms.empty() && !cfg.family) {
                    diags.push_back({0, "gl-sections requires [multivariate] or [family]"});
                }
                break;
            case ScenarioMode::Corollary:
                if (cfg.terms.empty() && cfg.forms.empty()) {
                    diags.push_back({0, "corollary requires [multivariate]"});
                }
                if (cfg.theta.empty()) diags.push_back({0, "corollary requires [stability] theta"});
                break;
            case ScenarioMode::Stability:
                if (cfg.theta.empty()) diags.push_back({0, "stability requires [stability] theta"});
                if (cfg.coeffs.empty() && cfg.roots.empty() && cfg.terms.empty() &&
                    cfg.forms.empty()) {
                    diags.push_back({0, "stability requires [poly] or [multivariate]"});
                }
                break;
            case ScenarioMode::SepHull:
                if (cfg.points.empty()) diags.push_back({0, "sep-hull requires [sephull] points"});
                if (cfg.bbox.empty()) diags.push_back({0, "sep-hull requires [sephull] bbox"});
                else if (!cfg.points.empty() &&
                         cfg.bbox.size() != 2 * cfg.points.front().size()) {
                    diags.push_back({0, "sep-hull bbox must give lo/hi for every axis"});
                }
                break;
        }
        if (!cfg.terms.empty()) {
            for (const auto& t : cfg.terms) {
                if (t.exps.size() != cfg.vars) {
                    diags.push_back({0, "term exponent count must equal vars"});
                    break;
                }
            }
        }
        for (const auto& f : cfg.forms) {
            if (f.coeffs.size() != cfg.vars) {
                diags.push_back({0, "form coefficient count must equal vars"});
                break;
            }
        }
    }
};

} // namespace

ParseResult parse_config(const std::string& text) {
    Parser p;
    std::istringstream is(text);
    std::string raw;
    static const char* known_sections[] = {"scenario", "family", "poly", "multivariate",
                                           "rearrange", "entire", "sections", "sephull",
                                           "stability"};
    while (std::getline(is, raw)) {
        ++p.line;
        std::string line = Parser::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                p.error("unterminated section header");
                continue;
            }
            std::string name = line.substr(1, line.size() - 2);
            if (std::find(std::begin(known_sections), std::end(known_sections), name) ==
                std::end(known_sections)) {
                p.error("unknown section [" + name + "]");
                p.section.clear();
                p.skipping_section = true;
                continue;
            }
            p.section = name;
            p.skipping_section = false;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            p.error("expected 'key = value'");
            continue;
        }
        std::string key = Parser::trim(line.substr(0, eq));
        std::string value = Parser::trim(line.substr(eq + 1));
        if (key.empty()) {
            p.error("missing key before '='");
            continue;
        }
        p.handle(key, value);
    }
    p.finish();
    ParseResult out;
    out.diagnostics = std::move(p.diags);
    if (out.diagnostics.empty()) out.config = std::move(p.cfg);
    return out;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string fmt(cplx z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

} // namespace

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "[scenario]\n";
    os << "id = " << cfg.id << "\n";
    os << "mode = " << to_string(cfg.mode) << "\n";
    os << "seed = " << cfg.seed << "\n";
    if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
    if (cfg.eps) os << "eps = " << fmt(*cfg.eps) << "\n";

    if (cfg.family) {
        const FamilyConfig& f = *cfg.family;
        os << "\n[family]\n";
        os << "kind = " << (f.kind == FamilyKind::Parametric ? "parametric" : "explicit") << "\n";
        if (f.kind == FamilyKind::Parametric) {
            os << "alpha = " << fmt(f.alpha) << "\n";
            os << "c = " << fmt(f.c) << "\n";
            os << "phases =";
            for (cplx z : f.phases) os << " " << fmt(z);
            os << "\n";
            os << "indexing = " << (f.indexing == ModulusIndexing::Shell ? "shell" : "direct")
               << "\n";
            os << "count = " << f.count << "\n";
        } else {
            for (cplx z : f.terms) os << "root = " << fmt(z) << "\n";
        }
        os << "q = " << f.q << "\n";
        if (f.genus) os << "genus = " << *f.genus << "\n";
        if (f.block_presentation) os << "blocks = " << f.block_presentation << "\n";
    }

    if (!cfg.coeffs.empty() || !cfg.roots.empty()) {
        os << "\n[poly]\n";
        if (!cfg.coeffs.empty()) {
            os << "coeffs =";
            for (cplx z : cfg.coeffs) os << " " << fmt(z);
            os << "\n";
        }
        if (!cfg.roots.empty()) {
            os << "roots =";
            for (cplx z : cfg.roots) os << " " << fmt(z);
            os << "\n";
            os << "leading = " << fmt(cfg.leading) << "\n";
        }
    }

    if (!cfg.terms.empty() || !cfg.forms.empty() || cfg.vars > 1) {
        os << "\n[multivariate]\n";
        os << "vars = " << cfg.vars << "\n";
        for (const auto& t : cfg.terms) {
            os << "term = " << fmt(t.coeff);
            for (unsigned e : t.exps) os << " " << e;
            os << "\n";
        }
        for (const auto& f : cfg.forms) {
            os << "form =";
            for (cplx z : f.coeffs) os << " " << fmt(z);
            os << " " << fmt(f.constant) << "\n";
        }
        if (cfg.var != 0) os << "var = " << (cfg.var + 1) << "\n";
    }

    if (cfg.mode == ScenarioMode::Rearrange || cfg.mode == ScenarioMode::GlEntire) {
        os << "\n[rearrange]\n";
        os << "n_target = " << cfg.n_target << "\n";
        os << "window = " << cfg.window << "\n";
        os << "target = " << fmt(cfg.target) << "\n";
    }

    if (!cfg.schedule.empty() || cfg.mode == ScenarioMode::GlEntire) {
        os << "\n[entire]\n";
        if (!cfg.schedule.empty()) {
            os << "schedule =";
            for (std::size_t n : cfg.schedule) os << " " << n;
            os << "\n";
        }
        os << "bbox = " << fmt(cfg.bbox_half_width) << "\n";
    }

    if (cfg.mode == ScenarioMode::GlSections) {
        os << "\n[sections]\n";
        os << "samples = " << cfg.samples << "\n";
        os << "box = " << fmt(cfg.sample_box) << "\n";
    }

    if (!cfg.points.empty() || !cfg.bbox.empty()) {
        os << "\n[sephull]\n";
        for (const auto& pt : cfg.points) {
            os << "point =";
            for (std::size_t i = 0; i + 1 < pt.size(); i += 2) {
                os << " " << fmt(cplx(pt[i], pt[i + 1]));
            }
            os << "\n";
        }
        if (!cfg.bbox.empty()) {
            os << "bbox =";
            for (double b : cfg.bbox) os << " " << fmt(b);
            os << "\n";
        }
        os << "resolution = " << cfg.resolution << "\n";
        os << "cap = " << cfg.pass_cap << "\n";
    }

    if (!cfg.theta.empty() || cfg.mode == ScenarioMode::Stability ||
        cfg.mode == ScenarioMode::Corollary) {
        os << "\n[stability]\n";
        os << "budget = " << cfg.budget << "\n";
        if (!cfg.theta.empty()) {
            os << "theta =";
            for (double a : cfg.theta) os << " " << fmt(a);
            os << "\n";
        }
    }
    return os.str();
}

} // namespace glucas
