#pragma once

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "vybe/lie_reduction.hpp"
#include "vybe/modules.hpp"
#include "vybe/report.hpp"
#include "vybe/semidirect.hpp"
#include "vybe/tensor.hpp"
#include "vybe/voa.hpp"

namespace vybe::io {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);  // "p/q" string, bare integer form kept

/// Algebra config:
///   {"algebra":"current","lie":{"dim":..,"brackets":[[i,j,k,"c"],..],
///    "form":[["k",..],..],"h_dual":"r"},"level":"k","max_degree":N}
/// or the shorthand {"algebra":"heisenberg","rank":1,"max_degree":N}
/// (identity form, level 1).
struct AlgebraConfig {
  std::optional<LieAlgebraData> lie;
  Rational level = Rational(1);
  int max_degree = 4;
};
AlgebraConfig parse_algebra_config(const Json& j);
AlgebraConfig load_algebra_config(const std::string& path);

/// Module descriptor: "adjoint", "coadjoint", or "fock:<rational>".
struct ModuleDescriptor {
  enum class Kind { adjoint, coadjoint, fock } kind = Kind::adjoint;
  Rational lambda = Rational(0);
  std::string str() const;
};
ModuleDescriptor parse_module_descriptor(const std::string& s);

/// Owns a coherent family of carriers built from a config: the algebra, the
/// selected module with its contragredient, and optionally the semidirect
/// product. Pointers inside reference owned members; keep the workspace alive
/// while using them.
struct Workspace {
  std::unique_ptr<CurrentVOA> V;
  std::unique_ptr<AdjointModule> adjoint;
  std::unique_ptr<FockModule> fock;
  std::unique_ptr<ContragredientModule> coadjoint;  // (adjoint)'
  const ModuleLike* W = nullptr;
  std::unique_ptr<ContragredientModule> Wp;  // W'
  std::unique_ptr<SemidirectVOA> U;
  ModuleDescriptor mod;
};
Workspace build_workspace(const AlgebraConfig& cfg, const std::optional<ModuleDescriptor>& mod,
                          bool want_semidirect);

/// Term-level basis encoding: a term object carries "mono":[[gen,mode],..]
/// plus optional "dual":true and, over a semidirect carrier, "part":"v"|"w*".
struct VecCodec {
  std::function<Json(BasisRef)> encode;
  std::function<BasisRef(const Json&)> decode;
};
VecCodec engine_codec(const CurrentEngine& eng);
VecCodec dual_codec(const VecCodec& inner);
VecCodec semidirect_codec(const SemidirectVOA& U, const VecCodec& v_codec,
                          const VecCodec& wdual_codec);
/// Codec for the workspace's plain VOA / selected module / semidirect carrier.
VecCodec voa_codec(const Workspace& ws);
VecCodec module_codec(const Workspace& ws);
VecCodec semidirect_codec(const Workspace& ws);

Json vec_to_json(const GradedVector& v, const VecCodec& codec);
GradedVector vec_from_json(const Json& j, const SpaceId& space, const VecCodec& codec);

/// Diagonal tensor file {"kind":"diagonal_tensor","carrier":..,"levels":{..}}.
Json tensor_to_json(const DiagonalTensor& r, const std::string& carrier_name,
                    const VecCodec& codec);
DiagonalTensor tensor_from_json(const Json& j, const SpaceId& space, const VecCodec& codec,
                                const std::function<int(int)>& level_dim);
/// Accepted carrier-name aliases for a tensor file bound to a given kind.
bool tensor_carrier_is_plain(const std::string& name);
bool tensor_carrier_is_semidirect(const std::string& name);

/// Level-preserving (or degree-shifted) map file
/// {"kind":"lp_map","source":..,"target":..,"degree_shift":d,"levels":{..}}.
Json map_to_json(const LevelwiseMatrix& T, const std::string& source_name,
                 const std::string& target_name);
LevelwiseMatrix map_from_json(const Json& j, const SpaceId& source, const SpaceId& target,
                              const std::function<int(int)>& source_dim,
                              const std::function<int(int)>& target_dim);
std::string map_source_name(const Json& j);

Json report_to_json(const CheckReport& rep);

Json load_json(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace vybe::io
