#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "omegav/forms.hpp"
#include "omegav/matrix.hpp"
#include "omegav/rep.hpp"
#include "omegav/surface.hpp"

namespace omegav {

/// Collected parse-time notes (e.g. entries that were reduced mod ell).
struct ParseWarnings {
  std::vector<std::string> messages;
  void add(std::string m) { messages.push_back(std::move(m)); }
};

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, PrimeField field,
                        ParseWarnings* warnings = nullptr);

nlohmann::json space_to_json(const BilinearSpace& V);
BilinearSpace space_from_json(const nlohmann::json& j, PrimeField field,
                              ParseWarnings* warnings = nullptr);

nlohmann::json rep_to_json(const RepImage& rep);
RepImage rep_from_json(const nlohmann::json& j,
                       ParseWarnings* warnings = nullptr);

nlohmann::json fiber_to_json(const KodairaFiber& f);
KodairaFiber fiber_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const SurfaceConfig& c);
SurfaceConfig config_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SurfaceReport& r);

}  // namespace omegav
