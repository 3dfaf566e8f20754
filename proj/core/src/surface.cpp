#include "omegav/surface.hpp"

#include <string>

#include "omegav/errors.hpp"

namespace omegav {

KodairaFiber KodairaFiber::I(int n, bool split) {
  KodairaFiber f;
  f.type = Type::I_n;
  f.n = n;
  f.split = split;
  return f;
}

KodairaFiber KodairaFiber::II_() { return {Type::II}; }

KodairaFiber KodairaFiber::III_() { return {Type::III}; }

KodairaFiber KodairaFiber::IIIStar() { return {Type::III_star}; }

KodairaFiber KodairaFiber::IStar(int n, RealComponents rc) {
  KodairaFiber f;
  f.type = Type::I_n_star;
  f.n = n;
  f.real_components = rc;
  return f;
}

namespace {

[[noreturn]] void unsupported(const std::string& what) {
  throw UnsupportedFiber("no tabulated value for real fiber " + what);
}

}  // namespace

std::int64_t fiber_chi(const KodairaFiber& f) {
  switch (f.type) {
    case KodairaFiber::Type::I_n:
      if (f.n == 1) return f.split ? -1 : 1;
      if (f.n == 2) return f.split ? -2 : 0;
      unsupported("I_" + std::to_string(f.n));
    case KodairaFiber::Type::II:
      return 0;
    case KodairaFiber::Type::III:
      return -1;
    case KodairaFiber::Type::III_star:
      return -7;
    case KodairaFiber::Type::I_n_star:
      return f.real_components == RealComponents::All ? -f.n - 4 : -f.n - 2;
  }
  unsupported("of unknown type");
}

std::int64_t fiber_trace(const KodairaFiber& f) {
  switch (f.type) {
    case KodairaFiber::Type::I_n:
      if (f.n == 1) return 0;
      if (f.n == 2) return -1;
      unsupported("I_" + std::to_string(f.n));
    case KodairaFiber::Type::II:
      return 0;
    case KodairaFiber::Type::III:
      return -1;
    case KodairaFiber::Type::III_star:
      return -7;
    case KodairaFiber::Type::I_n_star:
      // Same values as fiber_chi, which is what makes the I_n* count
      // drop out of every trace_V computation.
      return f.real_components == RealComponents::All ? -f.n - 4 : -f.n - 2;
  }
  unsupported("of unknown type");
}

std::int64_t fiber_conductor_exponent(const KodairaFiber& f) {
  return f.type == KodairaFiber::Type::I_n ? 1 : 2;
}

std::int64_t chi_real(const SurfaceConfig& config) {
  std::int64_t total = 0;
  for (const auto& f : config.real_fibers) total += fiber_chi(f);
  return total;  // conjugate pairs have no real points
}

std::int64_t trace_W(const SurfaceConfig& config) {
  // -2 for the smooth-fiber and section classes; non-real fibers are
  // swapped in pairs and contribute trace 0.
  std::int64_t total = -2;
  for (const auto& f : config.real_fibers) total += fiber_trace(f);
  return total;
}

std::int64_t trace_V(const SurfaceConfig& config) {
  return chi_real(config) - 2 - trace_W(config);
}

std::int64_t trace_c_mod_ell(const SurfaceConfig& config) {
  return -trace_V(config);
}

std::int64_t rank_N(const SurfaceConfig& config) {
  std::int64_t deg = 0;
  for (const auto& f : config.real_fibers) deg += fiber_conductor_exponent(f);
  for (const auto& f : config.conjugate_pairs)
    deg += 2 * fiber_conductor_exponent(f);
  return -4 + deg;
}

SurfaceReport surface_report(const SurfaceConfig& config) {
  SurfaceReport r;
  r.chi_real = chi_real(config);
  r.tr_W = trace_W(config);
  r.tr_V = r.chi_real - 2 - r.tr_W;
  r.tr_c = -r.tr_V;
  r.rank_N = rank_N(config);
  r.rank_warning = r.rank_N < 1;
  return r;
}

SurfaceConfig builtin_case(BuiltinCase name, int a1, int a2,
                           int n_pairs_extra, RealComponents i4_components) {
  SurfaceConfig c;
  switch (name) {
    case BuiltinCase::Case1:
      c.real_fibers = {KodairaFiber::I(1, false), KodairaFiber::I(2, false),
                       KodairaFiber::III_()};
      break;
    case BuiltinCase::Case2:
      c.real_fibers = {KodairaFiber::I(1, false), KodairaFiber::I(1, true),
                       KodairaFiber::II_(), KodairaFiber::II_()};
      break;
    case BuiltinCase::Case3O:
      c.real_fibers = {KodairaFiber::I(2, true), KodairaFiber::I(2, false),
                       KodairaFiber::IStar(4, i4_components),
                       KodairaFiber::IStar(4, i4_components)};
      break;
    case BuiltinCase::Case3Omega:
      c.real_fibers = {KodairaFiber::I(2, true), KodairaFiber::I(2, true),
                       KodairaFiber::IStar(4, i4_components),
                       KodairaFiber::IStar(4, i4_components)};
      break;
    case BuiltinCase::Case4:
      c.real_fibers = {KodairaFiber::I(1, false), KodairaFiber::I(2, true),
                       KodairaFiber::IIIStar()};
      break;
  }
  for (int i = 0; i < a1; ++i)
    c.real_fibers.push_back(KodairaFiber::IStar(0, RealComponents::All));
  for (int i = 0; i < a2; ++i)
    c.real_fibers.push_back(KodairaFiber::IStar(0, RealComponents::AllButTwo));
  for (int i = 0; i < n_pairs_extra; ++i)
    c.conjugate_pairs.push_back(KodairaFiber::IStar(0));
  return c;
}

}  // namespace omegav
