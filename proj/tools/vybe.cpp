// vybe: exact checks for truncated vertex operator algebras -- axiom suites,
// vertex-operator Yang-Baxter tensors, relative Rota-Baxter operators, and the
// level-one reduction to classical Yang-Baxter data. All arithmetic is exact
// rational; reports are deterministic (byte-identical across runs).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vybe/axioms.hpp"
#include "vybe/errors.hpp"
#include "vybe/io.hpp"
#include "vybe/lie_reduction.hpp"
#include "vybe/semidirect.hpp"
#include "vybe/yang_baxter.hpp"

namespace {

using vybe::CheckReport;
using vybe::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CommonOpts {
  std::string algebra_path;
  std::string module_desc;
  std::string tensor_path;
  std::string map_path;
  std::vector<int> m_set;
  int max_degree = -1;  // -1: take the config value
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--algebra", o.algebra_path, "algebra config file (JSON)")->required();
  cmd->add_option("--module", o.module_desc,
                  "module descriptor: adjoint | coadjoint | fock:<rational>");
  cmd->add_option("--tensor", o.tensor_path, "diagonal tensor file");
  cmd->add_option("--map", o.map_path, "level-preserving map file");
  cmd->add_option("--m", o.m_set, "mode to test (repeatable; default -2..3)");
  cmd->add_option("--max-degree", o.max_degree, "override the config truncation degree");
  cmd->add_option("--format", o.format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write the report (or object) to this file");
}

std::vector<int> m_set_or_default(const CommonOpts& o) {
  if (!o.m_set.empty()) return o.m_set;
  return {-2, -1, 0, 1, 2, 3};
}

vybe::io::AlgebraConfig load_config(const CommonOpts& o) {
  vybe::io::AlgebraConfig cfg = vybe::io::load_algebra_config(o.algebra_path);
  if (o.max_degree >= 0) cfg.max_degree = o.max_degree;
  return cfg;
}

void emit(const std::string& text, const CommonOpts& o) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw std::invalid_argument("cannot open '" + o.out_path + "' for writing");
  f << text;
}

int emit_report(const CheckReport& rep, const CommonOpts& o) {
  if (o.format == "json")
    emit(vybe::io::report_to_json(rep).dump(2) + "\n", o);
  else
    emit(rep.text(), o);
  return rep.passed() ? kExitPass : kExitFail;
}

std::optional<vybe::io::ModuleDescriptor> module_descriptor(const CommonOpts& o) {
  if (o.module_desc.empty()) return std::nullopt;
  return vybe::io::parse_module_descriptor(o.module_desc);
}

// Binds a tensor file to the right carrier: the plain algebra, or the
// semidirect product built from --module.
struct BoundTensor {
  vybe::io::Workspace ws;
  vybe::DiagonalTensor r;
  const vybe::VertexAlgebra* carrier = nullptr;
  bool semidirect = false;
};

BoundTensor bind_tensor(const CommonOpts& o) {
  Json tj = vybe::io::load_json(o.tensor_path);
  std::string name = tj.value("carrier", "");
  BoundTensor bt;
  if (vybe::io::tensor_carrier_is_plain(name)) {
    bt.ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), false);
    auto codec = vybe::io::voa_codec(bt.ws);
    bt.r = vybe::io::tensor_from_json(tj, bt.ws.V->space(), codec,
                                      [&](int n) { return bt.ws.V->level_dim(n); });
    bt.carrier = bt.ws.V.get();
  } else if (vybe::io::tensor_carrier_is_semidirect(name)) {
    if (o.module_desc.empty())
      throw std::invalid_argument("tensor carrier '" + name + "' needs --module");
    bt.ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), true);
    auto codec = vybe::io::semidirect_codec(bt.ws);
    bt.r = vybe::io::tensor_from_json(tj, bt.ws.U->space(), codec,
                                      [&](int n) { return bt.ws.U->level_dim(n); });
    bt.carrier = bt.ws.U.get();
    bt.semidirect = true;
  } else {
    throw std::invalid_argument("tensor: unknown carrier '" + name +
                                "' (expected voa/U/V or semidirect)");
  }
  return bt;
}

vybe::LevelwiseMatrix load_module_map(const CommonOpts& o, const vybe::io::Workspace& ws) {
  Json mj = vybe::io::load_json(o.map_path);
  std::string src = vybe::io::map_source_name(mj);
  if (!src.empty() && src != "W" && src != ws.mod.str())
    throw std::invalid_argument("map source '" + src + "' does not match --module '" +
                                ws.mod.str() + "'");
  return vybe::io::map_from_json(
      mj, ws.W->space(), ws.V->space(), [&](int n) { return ws.W->level_dim(n); },
      [&](int n) { return ws.V->level_dim(n); });
}

int cmd_check_voa(const CommonOpts& o) {
  auto ws = vybe::io::build_workspace(load_config(o), std::nullopt, false);
  return emit_report(vybe::verify_voa_axioms(*ws.V), o);
}

int cmd_check_voybe(const CommonOpts& o) {
  BoundTensor bt = bind_tensor(o);
  return emit_report(vybe::check_voybe(*bt.carrier, bt.r, m_set_or_default(o)), o);
}

int cmd_check_rbo(const CommonOpts& o) {
  auto ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), false);
  vybe::LevelwiseMatrix T = load_module_map(o, ws);
  CheckReport rep("relative-rbo[" + ws.mod.str() + "]");
  for (int m : m_set_or_default(o)) rep.absorb(vybe::check_relative_rbo(*ws.V, *ws.W, T, m));
  return emit_report(rep, o);
}

int cmd_check_strong_rbo(const CommonOpts& o) {
  auto ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), false);
  vybe::LevelwiseMatrix T = load_module_map(o, ws);
  CheckReport rep("strong-rbo[" + ws.mod.str() + "]");
  for (int m : m_set_or_default(o)) rep.absorb(vybe::check_strong_rbo(*ws.V, *ws.W, T, m));
  return emit_report(rep, o);
}

int cmd_build_r(const CommonOpts& o) {
  auto ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), true);
  vybe::LevelwiseMatrix T = load_module_map(o, ws);
  vybe::DiagonalTensor r = vybe::build_r_from_T(*ws.U, T);
  Json out = vybe::io::tensor_to_json(r, "semidirect", vybe::io::semidirect_codec(ws));
  emit(out.dump(2) + "\n", o);
  return kExitPass;
}

int cmd_convert(const CommonOpts& o, const std::string& to) {
  auto ws = vybe::io::build_workspace(load_config(o), std::nullopt, false);
  auto codec = vybe::io::voa_codec(ws);
  if (to == "map") {
    if (o.tensor_path.empty()) throw std::invalid_argument("convert --to map needs --tensor");
    Json tj = vybe::io::load_json(o.tensor_path);
    if (!vybe::io::tensor_carrier_is_plain(tj.value("carrier", "")))
      throw std::invalid_argument("convert works on plain-carrier tensors");
    vybe::DiagonalTensor r = vybe::io::tensor_from_json(
        tj, ws.V->space(), codec, [&](int n) { return ws.V->level_dim(n); });
    vybe::LevelwiseMatrix T = vybe::tensor_to_map(*ws.V, r);
    emit(vybe::io::map_to_json(T, "coadjoint", "voa").dump(2) + "\n", o);
    return kExitPass;
  }
  if (o.map_path.empty()) throw std::invalid_argument("convert --to tensor needs --map");
  Json mj = vybe::io::load_json(o.map_path);
  std::string src = vybe::io::map_source_name(mj);
  if (src != "coadjoint" && src != "U'" && src != "dual")
    throw std::invalid_argument("convert --to tensor expects a map with source coadjoint");
  vybe::LevelwiseMatrix T = vybe::io::map_from_json(
      mj, vybe::dual_space_of(ws.V->space()), ws.V->space(),
      [&](int n) { return ws.V->level_dim(n); }, [&](int n) { return ws.V->level_dim(n); });
  vybe::DiagonalTensor r = vybe::map_to_tensor(*ws.V, T);
  emit(vybe::io::tensor_to_json(r, "voa", codec).dump(2) + "\n", o);
  return kExitPass;
}

int cmd_reduce_level1(const CommonOpts& o) {
  if (!o.tensor_path.empty()) {
    BoundTensor bt = bind_tensor(o);
    vybe::LieTensor R = vybe::reduce_tensor(*bt.carrier, bt.r);
    vybe::DiagonalTensor slice(bt.carrier->space());
    for (auto& [ij, c] : R.entries) slice.add(1, ij.first, ij.second, c);
    auto codec =
        bt.semidirect ? vybe::io::semidirect_codec(bt.ws) : vybe::io::voa_codec(bt.ws);
    Json out =
        vybe::io::tensor_to_json(slice, bt.semidirect ? "lie_semidirect" : "lie", codec);
    emit(out.dump(2) + "\n", o);
    return kExitPass;
  }
  if (!o.map_path.empty()) {
    auto ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), false);
    vybe::LevelwiseMatrix T = load_module_map(o, ws);
    vybe::RationalMatrix block = vybe::reduce_map(*ws.V, T);
    vybe::LevelwiseMatrix out(ws.W->space(), ws.V->space(), T.degree_shift());
    out.set_block(1, block);
    emit(vybe::io::map_to_json(out, "lie", "lie").dump(2) + "\n", o);
    return kExitPass;
  }
  throw std::invalid_argument("reduce-level1 needs --tensor or --map");
}

int cmd_verify_reduction(const CommonOpts& o) {
  std::vector<int> ms = o.m_set.empty() ? std::vector<int>{0} : o.m_set;
  if (ms.size() != 1)
    throw std::invalid_argument("verify-reduction takes a single --m (default 0)");
  if (!o.tensor_path.empty()) {
    BoundTensor bt = bind_tensor(o);
    vybe::ReductionContext ctx;
    ctx.U = bt.carrier;
    ctx.r = &bt.r;
    if (bt.semidirect) {
      ctx.sd = bt.ws.U.get();
      ctx.W = bt.ws.W;
      ctx.Wp = bt.ws.Wp.get();
    }
    return emit_report(vybe::verify_reduction(ctx, ms[0]), o);
  }
  if (!o.map_path.empty()) {
    auto ws = vybe::io::build_workspace(load_config(o), module_descriptor(o), true);
    vybe::LevelwiseMatrix T = load_module_map(o, ws);
    vybe::ReductionContext ctx;
    ctx.U = ws.U.get();
    ctx.T = &T;
    ctx.sd = ws.U.get();
    ctx.W = ws.W;
    ctx.Wp = ws.Wp.get();
    return emit_report(vybe::verify_reduction(ctx, ms[0]), o);
  }
  throw std::invalid_argument("verify-reduction needs --tensor or --map");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vybe: exact verification for truncated vertex operator algebras, Yang-Baxter "
      "tensors, and relative Rota-Baxter operators"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string convert_to;

  auto* c_voa = app.add_subcommand("check-voa", "run the full axiom suite on an algebra");
  add_common(c_voa, o);
  auto* c_voybe = app.add_subcommand(
      "check-voybe", "check a diagonal tensor against the Yang-Baxter residuals per --m");
  add_common(c_voybe, o);
  c_voybe->get_option("--tensor")->required();
  auto* c_rbo = app.add_subcommand("check-rbo", "check the relative Rota-Baxter identity");
  add_common(c_rbo, o);
  c_rbo->get_option("--map")->required();
  auto* c_srbo = app.add_subcommand("check-strong-rbo",
                                    "relative identity plus the coadjoint compatibilities");
  add_common(c_srbo, o);
  c_srbo->get_option("--map")->required();
  auto* c_build = app.add_subcommand(
      "build-r", "skewsymmetrize a level-preserving map into a semidirect-product tensor");
  add_common(c_build, o);
  c_build->get_option("--map")->required();
  auto* c_conv = app.add_subcommand(
      "convert", "convert tensor <-> map (mutually inverse on skewsymmetric data)");
  add_common(c_conv, o);
  c_conv->add_option("--to", convert_to, "target kind: map | tensor")
      ->required()
      ->check(CLI::IsMember({"map", "tensor"}));
  auto* c_red = app.add_subcommand("reduce-level1", "extract the level-one slice");
  add_common(c_red, o);
  auto* c_vred = app.add_subcommand(
      "verify-reduction", "check the level-one reduction identities and implications");
  add_common(c_vred, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(c_voa)) return cmd_check_voa(o);
    if (app.got_subcommand(c_voybe)) return cmd_check_voybe(o);
    if (app.got_subcommand(c_rbo)) return cmd_check_rbo(o);
    if (app.got_subcommand(c_srbo)) return cmd_check_strong_rbo(o);
    if (app.got_subcommand(c_build)) return cmd_build_r(o);
    if (app.got_subcommand(c_conv)) return cmd_convert(o, convert_to);
    if (app.got_subcommand(c_red)) return cmd_reduce_level1(o);
    if (app.got_subcommand(c_vred)) return cmd_verify_reduction(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
