#pragma once

#include <cstdint>
#include <vector>

namespace omegav {

/// Which fiber components are defined over the reals, for I_n* fibers.
enum class RealComponents { All, AllButTwo };

/// Kodaira symbol of a singular fiber, with the real-structure data the
/// Euler characteristic and trace tables depend on.
struct KodairaFiber {
  enum class Type { I_n, II, III, III_star, I_n_star };

  Type type = Type::II;
  int n = 0;             // I_n (n >= 1) and I_n* (n >= 0) only
  bool split = false;    // I_n only
  RealComponents real_components = RealComponents::All;  // I_n* only

  static KodairaFiber I(int n, bool split);
  static KodairaFiber II_();
  static KodairaFiber III_();
  static KodairaFiber IIIStar();
  static KodairaFiber IStar(int n, RealComponents rc = RealComponents::All);
};

/// Singular fibers of a real elliptic surface: the ones over real points
/// of the base, and complex-conjugate pairs (one entry per pair).
struct SurfaceConfig {
  std::vector<KodairaFiber> real_fibers;
  std::vector<KodairaFiber> conjugate_pairs;
};

struct SurfaceReport {
  std::int64_t chi_real = 0;
  std::int64_t tr_W = 0;
  std::int64_t tr_V = 0;
  std::int64_t tr_c = 0;   // integer; reduce mod ell as needed
  std::int64_t rank_N = 0;
  bool rank_warning = false;  // rank_N < 1
};

/// Euler characteristic of the real points of a real singular fiber.
/// UnsupportedFiber for types whose values are not tabulated.
std::int64_t fiber_chi(const KodairaFiber& f);

/// Trace of the conjugation involution on the span of the fiber's
/// component classes (modulo the full fiber class).
std::int64_t fiber_trace(const KodairaFiber& f);

/// Tame conductor exponent: 1 multiplicative, 2 additive.
std::int64_t fiber_conductor_exponent(const KodairaFiber& f);

std::int64_t chi_real(const SurfaceConfig& config);
std::int64_t trace_W(const SurfaceConfig& config);
std::int64_t trace_V(const SurfaceConfig& config);
std::int64_t trace_c_mod_ell(const SurfaceConfig& config);
std::int64_t rank_N(const SurfaceConfig& config);

SurfaceReport surface_report(const SurfaceConfig& config);

/// The five tabulated fiber configurations, parameterized by the number of
/// I_0* fibers of each real structure and extra conjugate I_0* pairs.
enum class BuiltinCase { Case1, Case2, Case3O, Case3Omega, Case4 };

SurfaceConfig builtin_case(BuiltinCase name, int a1, int a2,
                           int n_pairs_extra,
                           RealComponents i4_components = RealComponents::All);

}  // namespace omegav
