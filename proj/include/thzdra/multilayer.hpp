// TM guided modes of 1D layered stacks with conductive (graphene) sheets at
// interfaces, via 2x2 transfer matrices and complex-plane root finding.
//
// Field ansatz in each region: H_y(z) = A e^{-gamma z} + B e^{+gamma z} with
// gamma = k0 sqrt(n_eff^2 - eps).  The state vector is (H_y, E_x/eta0); a
// layer of thickness d maps it by
//   [ cosh(theta)        -sinh(theta)/zeta ]        theta = gamma d
//   [ -zeta sinh(theta)   cosh(theta)      ] ,      zeta  = -j gamma_n / eps
// (gamma_n = gamma/k0), and a sheet of conductivity sigma at an interface by
// H -> H - (eta0 sigma) E.  The dispersion function is the mismatch against
// the decaying solution of the upper cladding; its zeros are the guided
// modes.  All values are dimensionless (eta0-normalised).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "thzdra/constants.hpp"
#include "thzdra/errors.hpp"
#include "thzdra/graphene.hpp"
#include "thzdra/rootfind.hpp"

namespace thzdra::multilayer {

struct HalfSpace {
  Complex eps{1.0, 0.0};
};

struct Layer {
  Complex eps{1.0, 0.0};
  double thickness = 0.0;  // m
};

// A sheet source is either a graphene description (Kubo conductivity at the
// operating frequency) or a fixed sheet conductivity in siemens.
using SheetSource = std::variant<graphene::GrapheneSheet, Complex>;

struct Sheet {
  int interface = 0;  // 0 = lower-cladding/first-layer boundary
  SheetSource source{Complex{0.0, 0.0}};
};

struct LayerStack {
  HalfSpace lower;
  std::vector<Layer> interior;
  HalfSpace upper;
  std::vector<Sheet> sheets;

  int interface_count() const { return static_cast<int>(interior.size()) + 1; }

  void validate() const {
    const auto passive = [](const Complex& eps) {
      return eps.imag() <= 1e-12 * std::abs(eps);
    };
    if (!passive(lower.eps) || !passive(upper.eps))
      throw DomainError("cladding permittivity must have Im(eps) <= 0");
    for (const auto& layer : interior) {
      if (!(layer.thickness > 0.0))
        throw DomainError("interior layer thickness must be > 0");
      if (!passive(layer.eps))
        throw DomainError("layer permittivity must have Im(eps) <= 0");
    }
    std::vector<int> seen;
    for (const auto& sheet : sheets) {
      if (sheet.interface < 0 || sheet.interface >= interface_count())
        throw DomainError("sheet interface index out of range");
      if (std::find(seen.begin(), seen.end(), sheet.interface) != seen.end())
        throw DomainError("at most one sheet per interface");
      seen.push_back(sheet.interface);
    }
  }
};

enum class ModeClass { SppLike, DielectricLike, Hybrid };

inline const char* to_string(ModeClass c) {
  switch (c) {
    case ModeClass::SppLike: return "spp-like";
    case ModeClass::DielectricLike: return "dielectric-like";
    default: return "hybrid";
  }
}

struct GuidedMode {
  double frequency = 0.0;  // Hz
  Complex n_eff{};         // beta/k0 - j alpha/k0
  double residual = 0.0;   // |dispersion function| at the root
  ModeClass classification = ModeClass::Hybrid;
  int iterations = 0;
};

struct SolveOptions {
  rootfind::NewtonOptions newton{};  // defaults: step 1e-7, tol 1e-10 / 1e-8
  bool classify = true;
};

// ---------------------------------------------------------------------------
// Frequency-resolved stack: permittivities plus sheet conductivities fixed at
// one omega, so root searches do not re-evaluate the Kubo integral.

struct ResolvedStack {
  double k0 = 0.0;
  Complex eps_lower{};
  Complex eps_upper{};
  std::vector<Layer> interior;
  std::vector<Complex> sigma_n;  // eta0 * sigma per interface
};

inline Complex sheet_conductivity(const SheetSource& source, double omega) {
  if (std::holds_alternative<Complex>(source))
    return std::get<Complex>(source);
  return graphene::conductivity(std::get<graphene::GrapheneSheet>(source), omega)
      .value;
}

inline ResolvedStack resolve(const LayerStack& stack, double omega) {
  stack.validate();
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
  ResolvedStack r;
  r.k0 = omega / phys::light_speed;
  r.eps_lower = stack.lower.eps;
  r.eps_upper = stack.upper.eps;
  r.interior = stack.interior;
  r.sigma_n.assign(stack.interface_count(), Complex{0.0, 0.0});
  for (const auto& sheet : stack.sheets)
    r.sigma_n[sheet.interface] =
        phys::free_space_impedance * sheet_conductivity(sheet.source, omega);
  return r;
}

struct EvalInfo {
  bool branch_cut_nudged = false;
};

namespace detail {

inline bool on_sqrt_cut(const Complex& arg) {
  return arg.imag() == 0.0 && arg.real() < 0.0;
}

inline Complex residual_at(const ResolvedStack& r, Complex n) {
  const Complex n2 = n * n;
  const Complex gl = std::sqrt(n2 - r.eps_lower);
  const Complex gu = std::sqrt(n2 - r.eps_upper);
  const Complex zeta_l = -j_unit * gl / r.eps_lower;
  const Complex zeta_u = -j_unit * gu / r.eps_upper;

  Complex h{1.0, 0.0};
  Complex e = -zeta_l;
  h -= r.sigma_n[0] * e;
  for (std::size_t i = 0; i < r.interior.size(); ++i) {
    const Complex g = std::sqrt(n2 - r.interior[i].eps);
    const Complex zeta = -j_unit * g / r.interior[i].eps;
    const Complex theta = g * r.k0 * r.interior[i].thickness;
    const Complex ch = std::cosh(theta);
    const Complex sh = std::sinh(theta);
    const Complex h_next = ch * h - sh / zeta * e;
    const Complex e_next = -zeta * sh * h + ch * e;
    h = h_next;
    e = e_next;
    h -= r.sigma_n[i + 1] * e;
  }
  return e - zeta_u * h;
}

}  // namespace detail

// Dispersion function whose zeros are the guided modes.  Queries that land
// exactly on a cladding branch cut are nudged by an ulp-scale imaginary
// offset (flagged in info).
inline Complex dispersion_residual(const ResolvedStack& r, Complex n_eff,
                                   EvalInfo* info = nullptr) {
  if (detail::on_sqrt_cut(n_eff * n_eff - r.eps_lower) ||
      detail::on_sqrt_cut(n_eff * n_eff - r.eps_upper)) {
    n_eff -= j_unit * 1e-15 * std::max(std::abs(n_eff), 1.0);
    if (info) info->branch_cut_nudged = true;
  }
  return detail::residual_at(r, n_eff);
}

inline Complex dispersion_residual(const LayerStack& stack, double omega,
                                   Complex n_eff, EvalInfo* info = nullptr) {
  return dispersion_residual(resolve(stack, omega), n_eff, info);
}

// ---------------------------------------------------------------------------
// Closed-form single-interface SPP: root of
//   eps1/gamma1_n + eps2/gamma2_n - j eta0 sigma = 0,
// solved exactly in the symmetric case and by complex Newton otherwise.

inline Complex analytic_spp_seed(Complex eps1, Complex eps2,
                                 const graphene::SurfaceConductivity& sigma,
                                 double /*omega is carried by sigma*/) {
  if (sigma.value.real() < -1e-12 * std::abs(sigma.value))
    throw DomainError("analytic_spp_seed requires Re sigma >= 0");
  const Complex sn = phys::free_space_impedance * sigma.value;
  if (sn == 0.0) throw NotFoundError("no SPP branch for sigma = 0");

  const auto decay = [](const Complex& n2, const Complex& eps) {
    return std::sqrt(n2 - eps);
  };

  if (eps1 == eps2) {
    const Complex gamma_n = -2.0 * j_unit * eps1 / sn;
    if (!(gamma_n.real() > 0.0))
      throw NotFoundError(
          "no SPP branch: sheet is not inductive (Im sigma >= 0 under e^{+jwt})");
    const Complex n2 = eps1 + gamma_n * gamma_n;
    Complex n = std::sqrt(n2);
    if (n.real() < 0.0) n = -n;
    return n;
  }

  const Complex eps_mean = 0.5 * (eps1 + eps2);
  const Complex gamma_mean = -2.0 * j_unit * eps_mean / sn;
  if (!(gamma_mean.real() > 0.0))
    throw NotFoundError(
        "no SPP branch: sheet is not inductive (Im sigma >= 0 under e^{+jwt})");
  Complex seed = std::sqrt(eps_mean + gamma_mean * gamma_mean);
  if (seed.real() < 0.0) seed = -seed;

  const auto relation = [&](Complex n) {
    const Complex n2 = n * n;
    return eps1 / decay(n2, eps1) + eps2 / decay(n2, eps2) - j_unit * sn;
  };
  const auto result = rootfind::newton(relation, seed);
  if (!result.converged)
    throw NotFoundError("no SPP branch: single-interface relation has no root "
                        "near " + std::to_string(seed.real()));
  const Complex n = result.root.real() < 0.0 ? -result.root : result.root;
  if (!(decay(n * n, eps1).real() > 0.0) || !(decay(n * n, eps2).real() > 0.0))
    throw NotFoundError("no SPP branch: candidate root is not bound");
  return n;
}

// ---------------------------------------------------------------------------
// Slab modes of the bare (sheet-free, lossless-ified) stack by real-axis
// bisection.  On the real axis above both cladding light lines the residual
// of a lossless stack is purely imaginary, so Im(D) brackets cleanly.
// Returned indices are sorted descending (fundamental first).

inline std::vector<double> bare_slab_indices(const LayerStack& stack,
                                             double omega,
                                             int scan_points = 1200) {
  ResolvedStack r = resolve(stack, omega);
  r.sigma_n.assign(r.sigma_n.size(), Complex{0.0, 0.0});
  r.eps_lower = Complex(r.eps_lower.real(), 0.0);
  r.eps_upper = Complex(r.eps_upper.real(), 0.0);
  double eps_max = 0.0;
  for (auto& layer : r.interior) {
    layer.eps = Complex(layer.eps.real(), 0.0);
    eps_max = std::max(eps_max, layer.eps.real());
  }
  const double n_clad =
      std::sqrt(std::max(r.eps_lower.real(), r.eps_upper.real()));
  const double n_lo = n_clad * (1.0 + 1e-9) + 1e-12;
  const double n_hi = std::sqrt(eps_max) * (1.0 - 1e-9);
  std::vector<double> roots;
  if (!(n_hi > n_lo)) return roots;

  const auto g = [&r](double n) {
    return detail::residual_at(r, Complex(n, 0.0)).imag();
  };
  double prev_n = n_lo;
  double prev_g = g(prev_n);
  for (int i = 1; i <= scan_points; ++i) {
    const double n = n_lo + (n_hi - n_lo) * i / scan_points;
    const double gn = g(n);
    if (prev_g == 0.0) {
      roots.push_back(prev_n);
    } else if ((gn > 0.0) != (prev_g > 0.0)) {
      roots.push_back(rootfind::bisect(g, prev_n, n, 1e-14));
    }
    prev_n = n;
    prev_g = gn;
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

namespace detail {

inline double max_cladding_index(const ResolvedStack& r) {
  return std::sqrt(std::max(r.eps_lower.real(), r.eps_upper.real()));
}

inline ModeClass classify(const LayerStack& stack, double omega,
                          const Complex& n_eff) {
  const auto slabs = bare_slab_indices(stack, omega);
  if (slabs.empty()) return ModeClass::SppLike;
  const double n_slab = slabs.front();
  if (n_eff.real() >= 1.5 * n_slab) return ModeClass::SppLike;
  if (std::abs(n_eff.real() - n_slab) <= 0.1 * n_slab)
    return ModeClass::DielectricLike;
  return ModeClass::Hybrid;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Mode solve: complex Newton from a caller-supplied seed, with light-line and
// branch-discipline rejection and alpha >= 0 enforcement.

inline GuidedMode solve_mode(const LayerStack& stack, double omega,
                             Complex seed, const SolveOptions& opts = {}) {
  const ResolvedStack r = resolve(stack, omega);
  const double n_clad = detail::max_cladding_index(r);
  if (!(seed.real() > n_clad))
    throw DomainError("seed lies outside the guided half-plane (Re seed <= "
                      "max cladding index)");

  const auto f = [&r](Complex n) { return dispersion_residual(r, n); };
  rootfind::RootResult result = rootfind::newton(f, seed, opts.newton);
  if (!result.converged)
    throw ConvergenceError(
        "mode solve did not converge after " +
        std::to_string(result.iterations) +
        " iterations; trace: " + rootfind::format_trace(result.trace));

  Complex n = result.root;
  // Lossless stacks land within rounding of the real axis; snap exactly.
  if (std::abs(n.imag()) < 1e-11 * std::max(1.0, std::abs(n.real())))
    n = Complex(n.real(), 0.0);

  // Forward decaying wave: alpha >= 0 means Im(n_eff) <= 0.  A conjugate
  // root is the growing partner; retry from the mirror once.
  if (n.imag() > 0.0) {
    result = rootfind::newton(f, std::conj(n), opts.newton);
    n = result.root;
    if (std::abs(n.imag()) < 1e-11 * std::max(1.0, std::abs(n.real())))
      n = Complex(n.real(), 0.0);
    if (!result.converged || n.imag() > 0.0)
      throw ConvergenceError("mode solve converged to a gain-side root "
                             "(alpha < 0); trace: " +
                             rootfind::format_trace(result.trace));
  }

  if (!(n.real() > n_clad * (1.0 + 1e-9)))
    throw ConvergenceError(
        "mode solve converged to a light-line zero (Re n_eff = " +
        std::to_string(n.real()) + ", cladding index " +
        std::to_string(n_clad) + "); not a guided mode");
  const Complex n2 = n * n;
  if (!(std::sqrt(n2 - r.eps_lower).real() > 0.0) ||
      !(std::sqrt(n2 - r.eps_upper).real() > 0.0))
    throw ConvergenceError("mode solve violated cladding decay "
                           "(Re gamma <= 0); rejected");

  GuidedMode mode;
  mode.frequency = omega / (2.0 * M_PI);
  mode.n_eff = n;
  mode.residual = std::abs(dispersion_residual(r, n));
  mode.iterations = result.iterations;
  mode.classification = opts.classify ? detail::classify(stack, omega, n)
                                      : ModeClass::Hybrid;
  return mode;
}

// ---------------------------------------------------------------------------
// Seed generation and multi-mode search.

inline std::vector<Complex> spp_seeds(const LayerStack& stack, double omega) {
  std::vector<Complex> seeds;
  for (const auto& sheet : stack.sheets) {
    const Complex sigma = sheet_conductivity(sheet.source, omega);
    if (sigma == 0.0) continue;
    const int k = sheet.interface;
    const Complex eps1 = k == 0 ? stack.lower.eps : stack.interior[k - 1].eps;
    const Complex eps2 = k == static_cast<int>(stack.interior.size())
                             ? stack.upper.eps
                             : stack.interior[k].eps;
    try {
      seeds.push_back(analytic_spp_seed(eps1, eps2, {sigma, omega}, omega));
    } catch (const Error&) {
      // capacitive sheet or unbound interface: no seed from this sheet
    }
  }
  return seeds;
}

// All distinct guided modes reachable from the SPP and bare-slab seeds,
// sorted by descending Re(n_eff).
inline std::vector<GuidedMode> find_modes(const LayerStack& stack, double omega,
                                          const SolveOptions& opts = {}) {
  std::vector<Complex> seeds = spp_seeds(stack, omega);
  for (double n : bare_slab_indices(stack, omega)) seeds.emplace_back(n, 0.0);

  std::vector<GuidedMode> modes;
  for (const Complex& seed : seeds) {
    try {
      GuidedMode mode = solve_mode(stack, omega, seed, opts);
      const bool duplicate =
          std::any_of(modes.begin(), modes.end(), [&](const GuidedMode& m) {
            return std::abs(m.n_eff - mode.n_eff) <
                   1e-8 * std::max(1.0, std::abs(m.n_eff));
          });
      if (!duplicate) modes.push_back(mode);
    } catch (const Error&) {
      // seed did not lead to a guided root
    }
  }
  std::sort(modes.begin(), modes.end(),
            [](const GuidedMode& a, const GuidedMode& b) {
              return a.n_eff.real() > b.n_eff.real();
            });
  return modes;
}

// The graphene-branch mode used for plasmon-wavelength queries: the root the
// SPP seed converges to, falling back to the most confined mode found.
inline GuidedMode solve_spp_mode(const LayerStack& stack, double omega,
                                 const SolveOptions& opts = {}) {
  std::string last_error = "no SPP seed available";
  for (const Complex& seed : spp_seeds(stack, omega)) {
    try {
      return solve_mode(stack, omega, seed, opts);
    } catch (const Error& e) {
      last_error = e.what();
    }
  }
  const auto modes = find_modes(stack, omega, opts);
  if (!modes.empty()) return modes.front();
  throw NotFoundError("no guided mode found: " + last_error);
}

// ---------------------------------------------------------------------------
// Mirrored stack (upper and lower swapped); 1D spectra are direction
// symmetric, which the tests assert.

inline LayerStack mirrored(const LayerStack& stack) {
  LayerStack m;
  m.lower = stack.upper;
  m.upper = stack.lower;
  m.interior.assign(stack.interior.rbegin(), stack.interior.rend());
  const int last = stack.interface_count() - 1;
  for (const auto& sheet : stack.sheets)
    m.sheets.push_back({last - sheet.interface, sheet.source});
  return m;
}

// ---------------------------------------------------------------------------
// Thin-bulk materialisation: each sheet becomes an interior layer of
// thickness d and eps = 1 - j sigma/(omega eps0 d).  Sheets with sigma = 0
// are dropped outright (a zero-conductivity sheet is no sheet), so both
// representations reduce to the bare stack in that limit.

inline LayerStack materialize_thin_bulk(const LayerStack& stack, double omega,
                                        double thickness) {
  if (!(thickness > 0.0))
    throw DomainError("thin-bulk materialisation requires thickness > 0");
  LayerStack bulk;
  bulk.lower = stack.lower;
  bulk.upper = stack.upper;
  std::vector<Sheet> sorted = stack.sheets;
  std::sort(sorted.begin(), sorted.end(),
            [](const Sheet& a, const Sheet& b) { return a.interface < b.interface; });
  std::size_t next = 0;
  const auto emit_sheet_layer = [&](int interface) {
    while (next < sorted.size() && sorted[next].interface == interface) {
      const Complex sigma = sheet_conductivity(sorted[next].source, omega);
      ++next;
      if (sigma == 0.0) continue;
      const Complex eps_g =
          1.0 - j_unit * sigma /
                    (omega * phys::vacuum_permittivity * thickness);
      bulk.interior.push_back({eps_g, thickness});
    }
  };
  emit_sheet_layer(0);
  for (std::size_t i = 0; i < stack.interior.size(); ++i) {
    bulk.interior.push_back(stack.interior[i]);
    emit_sheet_layer(static_cast<int>(i) + 1);
  }
  return bulk;
}

// Relative n_eff deviation between the sheet-conductivity and thin-bulk
// representations of the same stack.
inline double equivalence_check(const LayerStack& stack, double omega,
                                double thickness,
                                const SolveOptions& opts = {}) {
  if (stack.sheets.empty())
    throw DomainError("equivalence_check requires at least one sheet");
  const GuidedMode sheet_mode = solve_spp_mode(stack, omega, opts);
  const LayerStack bulk = materialize_thin_bulk(stack, omega, thickness);
  SolveOptions bulk_opts = opts;
  bulk_opts.classify = false;
  const GuidedMode bulk_mode =
      solve_mode(bulk, omega, sheet_mode.n_eff, bulk_opts);
  return std::abs(sheet_mode.n_eff - bulk_mode.n_eff) /
         std::abs(sheet_mode.n_eff);
}

// ---------------------------------------------------------------------------
// Parameterised hybrid stack (lower cladding | graphene | spacer | high-index
// slab | upper cladding) and continuation sweeps over its parameters.

struct HybridStackTemplate {
  double frequency = 3e12;              // Hz
  Complex eps_lower{2.4, 0.0};          // PMMA half-space
  Complex eps_spacer{2.4, 0.0};         // PMMA between graphene and slab
  double spacer_thickness = 3e-6;       // d_L
  Complex eps_high{12.9, 0.0};          // GaAs slab
  double high_thickness = 30e-6;        // d_H
  Complex eps_upper{1.0, 0.0};          // air
  graphene::GrapheneSheet sheet = graphene::GrapheneSheet::from_ev(5, 0.9, 0.6e-12);
  bool include_high = true;   // without the slab the stack is cladding|G|spacer->upper
  bool include_sheet = true;

  LayerStack materialize() const {
    LayerStack stack;
    stack.lower.eps = eps_lower;
    stack.interior.push_back({eps_spacer, spacer_thickness});
    if (include_high) stack.interior.push_back({eps_high, high_thickness});
    stack.upper.eps = eps_upper;
    if (include_sheet) stack.sheets.push_back({0, sheet});
    return stack;
  }
};

// The 1D structure of the source geometry: PMMA | 5-layer graphene |
// PMMA d_L = 3 um | GaAs d_H = 30 um | air.
inline HybridStackTemplate paper_stack_template(double mu_ev = 0.9,
                                                double frequency = 3e12) {
  HybridStackTemplate tpl;
  tpl.frequency = frequency;
  tpl.sheet = graphene::GrapheneSheet::from_ev(5, mu_ev, 0.6e-12);
  return tpl;
}

enum class SweepParameter { Frequency, ChemicalPotential, HighThickness, SpacerThickness };

inline const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Frequency: return "frequency";
    case SweepParameter::ChemicalPotential: return "chemical_potential";
    case SweepParameter::HighThickness: return "d_H";
    default: return "d_L";
  }
}

enum class SeedStrategy { Auto, Spp, Dielectric };

struct SweepOptions {
  SeedStrategy strategy = SeedStrategy::Auto;
  std::optional<Complex> explicit_seed;
  int max_bisections = 6;
  bool continuation = true;
  SolveOptions solve{};
};

struct SweepEntry {
  double parameter = 0.0;
  std::optional<GuidedMode> mode;
  std::string gap_reason;
};

namespace detail {

inline HybridStackTemplate with_parameter(HybridStackTemplate tpl,
                                          SweepParameter parameter,
                                          double value) {
  switch (parameter) {
    case SweepParameter::Frequency: tpl.frequency = value; break;
    case SweepParameter::ChemicalPotential:
      tpl.sheet.chemical_potential = value;  // J
      break;
    case SweepParameter::HighThickness: tpl.high_thickness = value; break;
    case SweepParameter::SpacerThickness: tpl.spacer_thickness = value; break;
  }
  return tpl;
}

inline GuidedMode fresh_solve(const HybridStackTemplate& tpl,
                              const SweepOptions& opts) {
  const LayerStack stack = tpl.materialize();
  const double omega = 2.0 * M_PI * tpl.frequency;
  if (opts.explicit_seed)
    return solve_mode(stack, omega, *opts.explicit_seed, opts.solve);
  switch (opts.strategy) {
    case SeedStrategy::Spp:
      return solve_spp_mode(stack, omega, opts.solve);
    case SeedStrategy::Dielectric: {
      const auto slabs = bare_slab_indices(stack, omega);
      if (slabs.empty())
        throw NotFoundError("no bare-slab mode to seed from");
      return solve_mode(stack, omega, Complex(slabs.front(), 0.0), opts.solve);
    }
    default:
      return solve_spp_mode(stack, omega, opts.solve);
  }
}

inline GuidedMode continued_solve(const HybridStackTemplate& base,
                                  SweepParameter parameter, double from,
                                  const Complex& seed, double to, int depth,
                                  const SweepOptions& opts) {
  const HybridStackTemplate tpl = with_parameter(base, parameter, to);
  const LayerStack stack = tpl.materialize();
  const double omega = 2.0 * M_PI * tpl.frequency;
  try {
    GuidedMode mode = solve_mode(stack, omega, seed, opts.solve);
    if (std::abs(mode.n_eff - seed) > 0.5 * (1.0 + std::abs(seed)))
      throw ConvergenceError("continuation jumped branches");
    return mode;
  } catch (const Error&) {
    if (depth >= opts.max_bisections) throw;
    const double mid = 0.5 * (from + to);
    const GuidedMode half =
        continued_solve(base, parameter, from, seed, mid, depth + 1, opts);
    return continued_solve(base, parameter, mid, half.n_eff, to, depth + 1,
                           opts);
  }
}

}  // namespace detail

// Continuation sweep: the solution at grid point i seeds point i+1; failed
// steps are bisected in parameter up to max_bisections times, and branch loss
// is recorded as an explicit gap entry.
inline std::vector<SweepEntry> sweep(const HybridStackTemplate& tpl,
                                     SweepParameter parameter,
                                     const std::vector<double>& grid,
                                     const SweepOptions& opts = {}) {
  if (grid.size() < 1) throw DomainError("sweep grid must not be empty");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw DomainError("sweep grid must be sorted ascending");

  std::vector<SweepEntry> entries;
  std::optional<std::pair<double, Complex>> previous;
  for (double value : grid) {
    SweepEntry entry;
    entry.parameter = value;
    try {
      GuidedMode mode;
      if (previous && opts.continuation) {
        mode = detail::continued_solve(tpl, parameter, previous->first,
                                       previous->second, value, 0, opts);
      } else {
        mode = detail::fresh_solve(detail::with_parameter(tpl, parameter, value),
                                   opts);
      }
      previous = {value, mode.n_eff};
      entry.mode = mode;
    } catch (const Error& e) {
      entry.gap_reason = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace thzdra::multilayer
