#include "omegav/serialize.hpp"

#include "omegav/errors.hpp"

namespace omegav {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ParseError("input schema violation: " + what);
}

std::int64_t get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(std::string("missing integer field \"") + key + "\"");
  return j[key].get<std::int64_t>();
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j, PrimeField field,
                        ParseWarnings* warnings) {
  std::size_t rows = static_cast<std::size_t>(get_int(j, "rows"));
  std::size_t cols = static_cast<std::size_t>(get_int(j, "cols"));
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != rows)
    fail("\"entries\" must be an array of " + std::to_string(rows) +
         " rows");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j["entries"][r];
    if (!row.is_array() || row.size() != cols)
      fail("row " + std::to_string(r) + " must have " +
           std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) fail("matrix entries must be integers");
      std::int64_t raw = row[c].get<std::int64_t>();
      std::uint64_t reduced = field.reduce(raw);
      if (warnings &&
          (raw < 0 || static_cast<std::uint64_t>(raw) != reduced))
        warnings->add("entry " + std::to_string(raw) + " reduced to " +
                      std::to_string(reduced) + " mod " +
                      std::to_string(field.modulus()));
      m.set(r, c, reduced);
    }
  }
  return m;
}

json space_to_json(const BilinearSpace& V) {
  return {{"kind", V.kind() == FormKind::Symmetric ? "symmetric"
                                                   : "alternating"},
          {"gram", matrix_to_json(V.gram())}};
}

BilinearSpace space_from_json(const json& j, PrimeField field,
                              ParseWarnings* warnings) {
  if (!j.contains("kind") || !j["kind"].is_string())
    fail("form needs a \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  FormKind fk;
  if (kind == "symmetric")
    fk = FormKind::Symmetric;
  else if (kind == "alternating")
    fk = FormKind::Alternating;
  else
    fail("form kind must be \"symmetric\" or \"alternating\"");
  if (j.contains("identity_dim")) {
    if (fk != FormKind::Symmetric)
      fail("identity_dim shorthand is for symmetric forms");
    return BilinearSpace::identity_form(
        field, static_cast<std::size_t>(get_int(j, "identity_dim")));
  }
  if (!j.contains("gram")) fail("form needs \"gram\" or \"identity_dim\"");
  return BilinearSpace(fk, matrix_from_json(j["gram"], field, warnings));
}

json rep_to_json(const RepImage& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators()) gens.push_back(matrix_to_json(g));
  return {{"ell", rep.field().modulus()},
          {"dim", rep.dim()},
          {"form", space_to_json(rep.space())},
          {"generators", gens},
          {"conjugation", matrix_to_json(rep.conjugation())}};
}

RepImage rep_from_json(const json& j, ParseWarnings* warnings) {
  PrimeField field(static_cast<std::uint64_t>(get_int(j, "ell")));
  if (!j.contains("form")) fail("representation needs a \"form\"");
  BilinearSpace space = space_from_json(j["form"], field, warnings);
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    fail("representation needs a nonempty \"generators\" array");
  std::vector<Matrix> gens;
  for (const auto& g : j["generators"])
    gens.push_back(matrix_from_json(g, field, warnings));
  if (!j.contains("conjugation")) fail("representation needs \"conjugation\"");
  Matrix conj = matrix_from_json(j["conjugation"], field, warnings);
  if (j.contains("dim") &&
      static_cast<std::size_t>(get_int(j, "dim")) != space.dim())
    fail("\"dim\" disagrees with the form dimension");
  return RepImage(std::move(gens), std::move(conj), std::move(space));
}

json fiber_to_json(const KodairaFiber& f) {
  switch (f.type) {
    case KodairaFiber::Type::I_n:
      return {{"type", "I_n"}, {"n", f.n}, {"split", f.split}};
    case KodairaFiber::Type::II:
      return {{"type", "II"}};
    case KodairaFiber::Type::III:
      return {{"type", "III"}};
    case KodairaFiber::Type::III_star:
      return {{"type", "III_star"}};
    case KodairaFiber::Type::I_n_star:
      return {{"type", "I_n_star"},
              {"n", f.n},
              {"real_components",
               f.real_components == RealComponents::All ? "all"
                                                        : "all_but_two"}};
  }
  fail("unknown fiber type");
}

KodairaFiber fiber_from_json(const json& j) {
  if (!j.contains("type") || !j["type"].is_string())
    fail("fiber needs a \"type\"");
  std::string t = j["type"].get<std::string>();
  if (t == "I_n") {
    int n = static_cast<int>(get_int(j, "n"));
    bool split = j.value("split", false);
    return KodairaFiber::I(n, split);
  }
  if (t == "II") return KodairaFiber::II_();
  if (t == "III") return KodairaFiber::III_();
  if (t == "III_star") return KodairaFiber::IIIStar();
  if (t == "I_n_star") {
    int n = static_cast<int>(get_int(j, "n"));
    // real_components defaults to "all"; trace_V is insensitive to it.
    std::string rc = j.value("real_components", "all");
    if (rc != "all" && rc != "all_but_two")
      fail("real_components must be \"all\" or \"all_but_two\"");
    return KodairaFiber::IStar(
        n, rc == "all" ? RealComponents::All : RealComponents::AllButTwo);
  }
  fail("unknown fiber type \"" + t + "\"");
}

json config_to_json(const SurfaceConfig& c) {
  json real = json::array(), pairs = json::array();
  for (const auto& f : c.real_fibers) real.push_back(fiber_to_json(f));
  for (const auto& f : c.conjugate_pairs) pairs.push_back(fiber_to_json(f));
  return {{"real_fibers", real}, {"conjugate_pairs", pairs}};
}

SurfaceConfig config_from_json(const json& j) {
  SurfaceConfig c;
  if (j.contains("real_fibers")) {
    if (!j["real_fibers"].is_array()) fail("real_fibers must be an array");
    for (const auto& f : j["real_fibers"])
      c.real_fibers.push_back(fiber_from_json(f));
  }
  if (j.contains("conjugate_pairs")) {
    if (!j["conjugate_pairs"].is_array())
      fail("conjugate_pairs must be an array");
    for (const auto& f : j["conjugate_pairs"])
      c.conjugate_pairs.push_back(fiber_from_json(f));
  }
  return c;
}

json report_to_json(const SurfaceReport& r) {
  return {{"chi_real", r.chi_real}, {"tr_W", r.tr_W},
          {"tr_V", r.tr_V},         {"tr_c_mod_ell", r.tr_c},
          {"rank_N", r.rank_N},     {"rank_warning", r.rank_warning}};
}

}  // namespace omegav
