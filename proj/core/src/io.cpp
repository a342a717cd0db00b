#include "vybe/io.hpp"

#include <fstream>
#include <stdexcept>

namespace vybe::io {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " +
                              j.dump());
}

Json rational_to_json(const Rational& r) { return r.str(); }

AlgebraConfig parse_algebra_config(const Json& j) {
  if (!j.is_object() || !j.contains("algebra"))
    throw std::invalid_argument("algebra config: missing \"algebra\" field");
  AlgebraConfig cfg;
  std::string kind = j.at("algebra").get<std::string>();
  if (j.contains("max_degree")) cfg.max_degree = j.at("max_degree").get<int>();
  if (cfg.max_degree < 0) throw std::invalid_argument("algebra config: negative max_degree");
  if (kind == "heisenberg") {
    int rank = j.contains("rank") ? j.at("rank").get<int>() : 1;
    if (rank < 1) throw std::invalid_argument("algebra config: rank must be positive");
    cfg.lie = LieAlgebraData::abelian(rank, identity_matrix(rank));
    cfg.level = Rational(1);
    if (j.contains("level")) cfg.level = rational_from_json(j.at("level"));
    return cfg;
  }
  if (kind != "current")
    throw std::invalid_argument("algebra config: unknown algebra kind '" + kind + "'");
  if (!j.contains("lie")) throw std::invalid_argument("algebra config: missing \"lie\"");
  const Json& lj = j.at("lie");
  int dim = lj.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("algebra config: lie.dim must be positive");
  std::vector<std::vector<std::vector<Rational>>> brackets(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
  if (lj.contains("brackets"))
    for (const Json& e : lj.at("brackets")) {
      if (!e.is_array() || e.size() != 4)
        throw std::invalid_argument("algebra config: bracket entries are [i,j,k,\"c\"]");
      int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
      if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
        throw std::invalid_argument("algebra config: bracket index out of range");
      brackets[i][jj][k] = rational_from_json(e[3]);
    }
  RationalMatrix form(dim, std::vector<Rational>(dim, Rational(0)));
  {
    const Json& fj = lj.at("form");
    if (!fj.is_array() || static_cast<int>(fj.size()) != dim)
      throw std::invalid_argument("algebra config: form must be a dim x dim matrix");
    for (int i = 0; i < dim; ++i) {
      if (!fj[i].is_array() || static_cast<int>(fj[i].size()) != dim)
        throw std::invalid_argument("algebra config: form must be a dim x dim matrix");
      for (int jj = 0; jj < dim; ++jj) form[i][jj] = rational_from_json(fj[i][jj]);
    }
  }
  std::optional<Rational> h_dual;
  if (lj.contains("h_dual")) h_dual = rational_from_json(lj.at("h_dual"));
  std::vector<std::string> names;
  if (lj.contains("names"))
    for (const Json& n : lj.at("names")) names.push_back(n.get<std::string>());
  cfg.lie = LieAlgebraData(dim, std::move(brackets), std::move(form), h_dual, std::move(names));
  if (!j.contains("level")) throw std::invalid_argument("algebra config: missing \"level\"");
  cfg.level = rational_from_json(j.at("level"));
  return cfg;
}

AlgebraConfig load_algebra_config(const std::string& path) {
  return parse_algebra_config(load_json(path));
}

std::string ModuleDescriptor::str() const {
  switch (kind) {
    case Kind::adjoint:
      return "adjoint";
    case Kind::coadjoint:
      return "coadjoint";
    case Kind::fock:
      return "fock:" + lambda.str();
  }
  return "?";
}

ModuleDescriptor parse_module_descriptor(const std::string& s) {
  ModuleDescriptor m;
  if (s == "adjoint") {
    m.kind = ModuleDescriptor::Kind::adjoint;
    return m;
  }
  if (s == "coadjoint") {
    m.kind = ModuleDescriptor::Kind::coadjoint;
    return m;
  }
  if (s.rfind("fock:", 0) == 0) {
    m.kind = ModuleDescriptor::Kind::fock;
    m.lambda = Rational::parse(s.substr(5));
    return m;
  }
  throw std::invalid_argument("unknown module descriptor '" + s +
                              "' (expected adjoint, coadjoint, or fock:<rational>)");
}

Workspace build_workspace(const AlgebraConfig& cfg, const std::optional<ModuleDescriptor>& mod,
                          bool want_semidirect) {
  if (!cfg.lie) throw std::invalid_argument("build_workspace: config has no algebra");
  Workspace ws;
  ws.V = std::make_unique<CurrentVOA>(*cfg.lie, cfg.level, cfg.max_degree);
  ws.adjoint = std::make_unique<AdjointModule>(*ws.V);
  ws.mod = mod.value_or(ModuleDescriptor{});
  switch (ws.mod.kind) {
    case ModuleDescriptor::Kind::adjoint:
      ws.W = ws.adjoint.get();
      break;
    case ModuleDescriptor::Kind::coadjoint:
      ws.coadjoint = std::make_unique<ContragredientModule>(*ws.adjoint);
      ws.W = ws.coadjoint.get();
      break;
    case ModuleDescriptor::Kind::fock:
      ws.fock = std::make_unique<FockModule>(*ws.V, ws.mod.lambda);
      ws.W = ws.fock.get();
      break;
  }
  if (want_semidirect) {
    ws.Wp = std::make_unique<ContragredientModule>(*ws.W);
    ws.U = std::make_unique<SemidirectVOA>(*ws.V, *ws.W, *ws.Wp);
  }
  return ws;
}

VecCodec engine_codec(const CurrentEngine& eng) {
  const CurrentEngine* e = &eng;
  VecCodec c;
  c.encode = [e](BasisRef ref) {
    Json mono = Json::array();
    for (auto& [g, m] : e->monomial(ref).factors) mono.push_back(Json::array({g, m}));
    Json t = Json::object();
    t["mono"] = std::move(mono);
    return t;
  };
  c.decode = [e](const Json& term) {
    PBWMonomial mono;
    for (const Json& f : term.at("mono")) {
      if (!f.is_array() || f.size() != 2)
        throw std::invalid_argument("vec term: mono factors are [gen,mode]");
      int g = f[0].get<int>(), m = f[1].get<int>();
      if (g < 0 || g >= e->lie().dim())
        throw std::invalid_argument("vec term: generator index out of range");
      if (m > -1) throw std::invalid_argument("vec term: creation modes must be <= -1");
      mono.factors.emplace_back(g, m);
    }
    if (!mono.is_normal_order())
      throw std::invalid_argument(
          "vec term: factors must be normally ordered (mode descending, generator ascending)");
    return e->ref_of(mono);
  };
  return c;
}

VecCodec dual_codec(const VecCodec& inner) {
  VecCodec c;
  VecCodec in = inner;
  c.encode = [in](BasisRef ref) {
    Json t = in.encode(ref);
    t["dual"] = true;
    return t;
  };
  c.decode = [in](const Json& term) {
    if (!term.contains("dual") || !term.at("dual").get<bool>())
      throw std::invalid_argument("vec term: expected a dual-basis term (\"dual\":true)");
    return in.decode(term);
  };
  return c;
}

VecCodec semidirect_codec(const SemidirectVOA& U, const VecCodec& v_codec,
                          const VecCodec& wdual_codec) {
  const SemidirectVOA* u = &U;
  VecCodec vc = v_codec, wc = wdual_codec;
  VecCodec c;
  c.encode = [u, vc, wc](BasisRef ref) {
    if (u->is_v_ref(ref)) {
      Json t = vc.encode(u->to_v(ref));
      t["part"] = "v";
      return t;
    }
    Json t = wc.encode(u->to_wp(ref));
    t["part"] = "w*";
    return t;
  };
  c.decode = [u, vc, wc](const Json& term) {
    std::string part = term.contains("part") ? term.at("part").get<std::string>() : "v";
    if (part == "v") return u->from_v(vc.decode(term));
    if (part == "w*") return u->from_wp(wc.decode(term));
    throw std::invalid_argument("vec term: part must be \"v\" or \"w*\"");
  };
  return c;
}

VecCodec voa_codec(const Workspace& ws) { return engine_codec(ws.V->engine()); }

VecCodec module_codec(const Workspace& ws) {
  switch (ws.mod.kind) {
    case ModuleDescriptor::Kind::adjoint:
      return engine_codec(ws.V->engine());
    case ModuleDescriptor::Kind::coadjoint:
      return dual_codec(engine_codec(ws.V->engine()));
    case ModuleDescriptor::Kind::fock:
      return engine_codec(ws.fock->engine());
  }
  throw std::logic_error("module_codec: bad module kind");
}

VecCodec semidirect_codec(const Workspace& ws) {
  if (!ws.U) throw std::logic_error("semidirect_codec: workspace has no semidirect carrier");
  return semidirect_codec(*ws.U, voa_codec(ws), dual_codec(module_codec(ws)));
}

Json vec_to_json(const GradedVector& v, const VecCodec& codec) {
  Json terms = Json::array();
  for (auto& [ref, c] : v.terms()) {
    Json t = codec.encode(ref);
    t["coeff"] = rational_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["terms"] = std::move(terms);
  return out;
}

GradedVector vec_from_json(const Json& j, const SpaceId& space, const VecCodec& codec) {
  GradedVector v(space);
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("vec: missing \"terms\"");
  for (const Json& t : j.at("terms")) {
    BasisRef ref = codec.decode(t);
    v.add(ref, rational_from_json(t.at("coeff")));
  }
  return v;
}

bool tensor_carrier_is_plain(const std::string& name) {
  return name == "U" || name == "V" || name == "voa";
}
bool tensor_carrier_is_semidirect(const std::string& name) {
  return name == "semidirect" || name == "U=VxW'" || name == "lie_semidirect";
}

Json tensor_to_json(const DiagonalTensor& r, const std::string& carrier_name,
                    const VecCodec& codec) {
  Json out = Json::object();
  out["kind"] = "diagonal_tensor";
  out["carrier"] = carrier_name;
  Json levels = Json::object();
  for (auto& [lvl, entries] : r.levels()) {
    Json list = Json::array();
    for (auto& [ij, c] : entries) {
      Json pair = Json::object();
      Json lt = codec.encode(BasisRef{lvl, ij.first});
      lt["coeff"] = "1";
      Json rt = codec.encode(BasisRef{lvl, ij.second});
      rt["coeff"] = "1";
      pair["left"] = Json::object({{"terms", Json::array({std::move(lt)})}});
      pair["right"] = Json::object({{"terms", Json::array({std::move(rt)})}});
      pair["coeff"] = rational_to_json(c);
      list.push_back(std::move(pair));
    }
    levels[std::to_string(lvl)] = std::move(list);
  }
  out["levels"] = std::move(levels);
  return out;
}

DiagonalTensor tensor_from_json(const Json& j, const SpaceId& space, const VecCodec& codec,
                                const std::function<int(int)>& level_dim) {
  if (!j.is_object() || j.value("kind", "") != "diagonal_tensor")
    throw std::invalid_argument("tensor: kind must be \"diagonal_tensor\"");
  DiagonalTensor r(space);
  if (!j.contains("levels")) return r;
  for (auto it = j.at("levels").begin(); it != j.at("levels").end(); ++it) {
    int lvl = std::stoi(it.key());
    if (lvl < 0) throw std::invalid_argument("tensor: negative level");
    if (level_dim(lvl) == 0 && !it.value().empty())
      throw std::invalid_argument("tensor: level " + it.key() +
                                  " is outside the carrier window");
    for (const Json& pair : it.value()) {
      GradedVector left = vec_from_json(pair.at("left"), space, codec);
      GradedVector right = vec_from_json(pair.at("right"), space, codec);
      Rational c = rational_from_json(pair.at("coeff"));
      if (left.is_zero() || right.is_zero() || c.is_zero()) continue;
      if (!left.is_homogeneous() || left.level() != lvl || !right.is_homogeneous() ||
          right.level() != lvl)
        throw std::invalid_argument("tensor: pair under level " + it.key() +
                                    " is not homogeneous at that level");
      r.add_pair(left, right, c);
    }
  }
  return r;
}

Json map_to_json(const LevelwiseMatrix& T, const std::string& source_name,
                 const std::string& target_name) {
  Json out = Json::object();
  out["kind"] = "lp_map";
  out["source"] = source_name;
  out["target"] = target_name;
  out["degree_shift"] = T.degree_shift();
  Json levels = Json::object();
  for (auto& [lvl, block] : T.blocks()) {
    Json rows = Json::array();
    for (auto& row : block) {
      Json r = Json::array();
      for (auto& c : row) r.push_back(rational_to_json(c));
      rows.push_back(std::move(r));
    }
    levels[std::to_string(lvl)] = std::move(rows);
  }
  out["levels"] = std::move(levels);
  return out;
}

std::string map_source_name(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "lp_map")
    throw std::invalid_argument("map: kind must be \"lp_map\"");
  return j.value("source", "");
}

LevelwiseMatrix map_from_json(const Json& j, const SpaceId& source, const SpaceId& target,
                              const std::function<int(int)>& source_dim,
                              const std::function<int(int)>& target_dim) {
  if (!j.is_object() || j.value("kind", "") != "lp_map")
    throw std::invalid_argument("map: kind must be \"lp_map\"");
  int shift = j.value("degree_shift", 0);
  LevelwiseMatrix T(source, target, shift);
  if (j.contains("levels"))
    for (auto it = j.at("levels").begin(); it != j.at("levels").end(); ++it) {
      int lvl = std::stoi(it.key());
      if (lvl < 0) throw std::invalid_argument("map: negative source level");
      int cols = source_dim(lvl);
      int rows = target_dim(lvl + shift);
      const Json& rj = it.value();
      if (static_cast<int>(rj.size()) != rows)
        throw std::invalid_argument("map: block at level " + it.key() + " must have " +
                                    std::to_string(rows) + " rows");
      std::vector<std::vector<Rational>> block(rows, std::vector<Rational>(cols, Rational(0)));
      for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(rj[i].size()) != cols)
          throw std::invalid_argument("map: block at level " + it.key() + " must have " +
                                      std::to_string(cols) + " columns");
        for (int k = 0; k < cols; ++k) block[i][k] = rational_from_json(rj[i][k]);
      }
      T.set_block(lvl, std::move(block));
    }
  return T;
}

Json report_to_json(const CheckReport& rep) {
  Json out = Json::object();
  out["schema"] = "1";
  out["title"] = rep.title();
  out["notes"] = rep.notes();
  Json comps = Json::array();
  for (const auto& c : rep.components()) {
    Json cj = Json::object();
    cj["id"] = c.id;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    comps.push_back(std::move(cj));
  }
  out["components"] = std::move(comps);
  out["coverage"] = rep.coverage();
  out["skipped"] = rep.skipped();
  out["result"] = rep.passed() ? "pass" : "fail";
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace vybe::io
