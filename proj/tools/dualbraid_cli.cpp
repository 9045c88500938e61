#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "dualbraid/verify.hpp"
#include "fan_svg.hpp"

using json = nlohmann::ordered_json;
using namespace dualbraid;

namespace {

constexpr int kSchemaVersion = 1;

json num(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json num(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p())
    return x.get_num().get_si();
  return rat_to_string(x);
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(num(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json series_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

json dual_element_json(const PositiveComplex& C, const DualElement& x) {
  json terms = json::array();
  for (const auto& [fid, coef] : x) {
    json t;
    t["face"] = C.face(fid).verts;
    t["nc"] = C.face(fid).nc;
    t["coeff"] = num(coef);
    terms.push_back(t);
  }
  return terms;
}

std::vector<ReflId> parse_refl_list(const CoxeterGroup& g, const std::string& s) {
  std::vector<ReflId> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.find_first_not_of("0123456789") == std::string::npos) {
      int t = std::stoi(tok);
      require(t >= 0 && t < g.num_reflections(), "reflection id out of range");
      out.push_back(t);
    } else {
      out.push_back(reflection_by_name(g, tok));
    }
  }
  return out;
}

void print(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

json results_json(const std::vector<CheckResult>& rs) {
  json out = json::array();
  for (const auto& r : rs) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["details"] = r.details;
    out.push_back(j);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual braid monoid / positive cluster complex toolkit"};
  app.require_subcommand(1);

  std::string group = "A3:1,2,3";
  std::string out_path, left_str, right_str, word_str;
  int max_deg = 6, fixed_i = -1, char_i = 0, comp_j = 1;
  std::uint64_t seed = 0x5eed5eedULL;
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--seed", seed, "seed for randomized property tests");

  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", group, "group spec, e.g. B3:1,3,2");
  };

  // --- nc ---
  auto* nc = app.add_subcommand("nc", "noncrossing partition lattice");
  auto* nc_export = nc->add_subcommand("export", "elements, ranks, Mobius, covers");
  add_group(nc_export);
  auto* nc_refl = nc->add_subcommand("reflections", "reflection table");
  add_group(nc_refl);

  // --- monoid ---
  auto* monoid = app.add_subcommand("monoid", "dual braid monoid");
  auto* growth = monoid->add_subcommand("growth", "growth series by degree");
  add_group(growth);
  growth->add_option("--max-deg", max_deg, "highest degree");
  growth->add_option("--fixed", fixed_i, "restrict to the c^i-fixed submonoid");

  // --- cluster ---
  auto* cluster = app.add_subcommand("cluster", "positive cluster complex");
  auto* facets = cluster->add_subcommand("facets", "positive c-clusters");
  add_group(facets);
  auto* fvector = cluster->add_subcommand("fvector", "face counts");
  add_group(fvector);
  auto* homology = cluster->add_subcommand("homology", "reduced Betti numbers per w");
  add_group(homology);
  auto* fansvg = cluster->add_subcommand("fan-svg", "plot the positive fan");
  add_group(fansvg);
  fansvg->add_option("--out", out_path, "output SVG path")->required();

  // --- resolution ---
  auto* resolution = app.add_subcommand("resolution", "minimal free resolution");
  auto* res_verify = resolution->add_subcommand("verify", "graded exactness report");
  add_group(res_verify);
  res_verify->add_option("--max-deg", max_deg, "top total degree");

  // --- algebra ---
  auto* algebra = app.add_subcommand("algebra", "Koszul-dual algebra");
  auto* hilbert = algebra->add_subcommand("hilbert", "Hilbert polynomial");
  add_group(hilbert);
  auto* basis = algebra->add_subcommand("basis", "PBW face basis");
  add_group(basis);
  auto* product = algebra->add_subcommand("product", "product of two basis faces");
  add_group(product);
  product->add_option("--left", left_str, "left face, reflections by id or name")
      ->required();
  product->add_option("--right", right_str, "right face")->required();
  auto* character = algebra->add_subcommand("character", "trace of c^i per degree");
  add_group(character);
  character->add_option("--i", char_i, "power of the Coxeter element");

  // --- nichols ---
  auto* nichols = app.add_subcommand("nichols", "twisted shuffle algebra");
  auto* nich_dim = nichols->add_subcommand("dim", "dim N_(w,j)");
  add_group(nich_dim);
  nich_dim->add_option("--word", word_str, "reflections whose product is w")
      ->required();
  nich_dim->add_option("--j", comp_j, "tensor length");
  auto* nich_hom = nichols->add_subcommand("homology", "top homology of NC via xi");
  add_group(nich_hom);
  auto* nich_psi = nichols->add_subcommand("psi-check", "quotient isomorphism report");
  add_group(nich_psi);

  // --- os ---
  auto* os_cmd = app.add_subcommand("os", "Orlik-Solomon algebra");
  auto* os_dims = os_cmd->add_subcommand("dims", "dimensions by flat and codim");
  add_group(os_dims);

  // --- verify-all ---
  auto* verify_all = app.add_subcommand("verify-all", "run every check for a group");
  add_group(verify_all);
  verify_all->add_option("--max-deg", max_deg, "resolution degree cap");

  // parent flags (--pretty, --seed) may appear after a subcommand
  auto set_fallthrough = [](CLI::App* a, auto&& self) -> void {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  set_fallthrough(&app, set_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["group"] = group;
    VerifyOptions opts;
    opts.threads = thread_count_from_env();
    opts.seed = seed;

    auto context = [&]() {
      return std::make_unique<GroupContext>(GroupSpec::parse(group));
    };

    if (*nc_export) {
      auto c = context();
      json elems = json::array();
      for (int i = 0; i < c->L->size(); ++i) {
        json e;
        e["index"] = i;
        e["rank"] = c->L->rank_of(i);
        e["moebius"] = c->L->moebius(i);
        std::string name = element_name(*c->g, c->L->element(i));
        if (!name.empty()) e["name"] = name;
        e["matrix"] = matrix_json(c->g->matrix_of(c->L->element(i)));
        elems.push_back(e);
      }
      json covers = json::array();
      for (int i = 0; i < c->L->size(); ++i)
        for (int j = 0; j < c->L->size(); ++j)
          if (c->L->leq(i, j) && c->L->rank_of(j) == c->L->rank_of(i) + 1)
            covers.push_back(json::array({i, j}));
      out["elements"] = elems;
      out["cover_relations"] = covers;
      print(out, pretty);
    } else if (*nc_refl) {
      auto c = context();
      json table = json::array();
      for (int t = 0; t < c->g->num_reflections(); ++t) {
        json e;
        e["id"] = t;
        e["name"] = reflection_name(*c->g, t);
        e["root"] = c->g->root(t);
        e["matrix"] = matrix_json(c->g->matrix_of(c->g->reflection_element(t)));
        table.push_back(e);
      }
      out["reflections"] = table;
      print(out, pretty);
    } else if (*growth) {
      auto c = context();
      std::vector<long> mu;
      std::vector<Int> coeffs;
      if (fixed_i >= 0) {
        SubPoset fix = c->L->fixed_subposet(fixed_i);
        mu = c->L->subposet_moebius_polynomial(fix);
        coeffs = c->M->fixed_growth(fixed_i, max_deg);
      } else {
        mu = c->L->moebius_polynomial();
        coeffs = c->M->growth_series(max_deg);
      }
      out["coefficients"] = series_json(coeffs);
      out["moebius_polynomial"] = mu;
      out["verified"] = (coeffs == series_inverse(mu, max_deg));
      print(out, pretty);
    } else if (*facets) {
      auto c = context();
      json fs = json::array();
      for (int fid : c->C->facet_ids()) {
        json f;
        f["reflections"] = c->C->face(fid).verts;
        json names = json::array();
        for (ReflId t : c->C->face(fid).verts)
          names.push_back(reflection_name(*c->g, t));
        f["names"] = names;
        fs.push_back(f);
      }
      out["facets"] = fs;
      json order = json::array();
      for (ReflId t : c->order.by_pos) order.push_back(reflection_name(*c->g, t));
      out["reflection_order"] = order;
      print(out, pretty);
    } else if (*fvector) {
      auto c = context();
      out["f_polynomial"] = c->C->f_polynomial();
      print(out, pretty);
    } else if (*homology) {
      auto c = context();
      json per_w = json::array();
      for (int w = 0; w < c->L->size(); ++w) {
        if (w == c->L->bottom()) continue;
        json e;
        e["nc_index"] = w;
        e["betti"] = reduced_betti(c->C->chain_complex(c->C->subcomplex_faces(w)));
        per_w.push_back(e);
      }
      out["reduced_homology"] = per_w;
      print(out, pretty);
    } else if (*fansvg) {
      auto c = context();
      emit_fan_svg(*c, out_path);
      out["written"] = out_path;
      print(out, pretty);
    } else if (*res_verify) {
      auto c = context();
      Resolution res(*c->M, *c->C);
      ExactnessReport rep = res.graded_exactness(max_deg);
      json rows = json::array();
      for (const auto& p : rep.positions) {
        json r;
        r["degree"] = p.degree;
        r["position"] = p.position;
        r["dim"] = p.dim;
        r["rank_out"] = p.rank_out;
        r["rank_in"] = p.rank_in;
        r["exact"] = p.exact;
        rows.push_back(r);
      }
      out["positions"] = rows;
      out["exact"] = rep.pass;
      out["minimal"] = rep.minimal;
      out["theta_split"] = rep.theta_split;
      out["d_squared_zero"] = rep.d_squared_zero;
      print(out, pretty);
      return rep.pass ? 0 : 1;
    } else if (*hilbert) {
      auto c = context();
      out["coefficients"] = c->P->hilbert();
      print(out, pretty);
    } else if (*basis) {
      auto c = context();
      json faces = json::array();
      for (int fid = 0; fid < c->C->num_faces(); ++fid) {
        json f;
        f["face"] = c->C->face(fid).verts;
        f["nc"] = c->C->face(fid).nc;
        faces.push_back(f);
      }
      out["basis"] = faces;
      print(out, pretty);
    } else if (*product) {
      auto c = context();
      std::vector<ReflId> lw = parse_refl_list(*c->g, left_str);
      std::vector<ReflId> rw = parse_refl_list(*c->g, right_str);
      require(c->C->face_id(lw) >= 0, "--left is not a face (descending?)");
      require(c->C->face_id(rw) >= 0, "--right is not a face (descending?)");
      std::vector<ReflId> word = lw;
      word.insert(word.end(), rw.begin(), rw.end());
      out["product"] = dual_element_json(*c->C, c->P->rewrite(word));
      out["geometric"] = dual_element_json(*c->C, c->P->multiply_geometric(word));
      print(out, pretty);
    } else if (*character) {
      auto c = context();
      out["i"] = char_i;
      out["traces"] = series_json(c->P->cyclic_character(char_i));
      SubPoset fix = c->L->fixed_subposet(char_i);
      out["fixed_moebius_polynomial"] = c->L->subposet_moebius_polynomial(fix);
      print(out, pretty);
    } else if (*nich_dim) {
      auto c = context();
      std::vector<ReflId> ts = parse_refl_list(*c->g, word_str);
      ElemId w = c->g->product_of_reflections(ts);
      bool truncated = false;
      int dim = c->N->component_dim(w, comp_j, 2000000, &truncated);
      out["j"] = comp_j;
      out["dim"] = dim;
      out["truncated"] = truncated;
      print(out, pretty);
    } else if (*nich_hom) {
      auto c = context();
      TopHomologyReport rep = c->N->nc_top_homology(*c->L);
      out["dim_component"] = rep.dim_component;
      out["dim_kernel"] = rep.dim_kernel;
      out["mu_invariant"] = rep.mu_invariant;
      out["xi_injective"] = rep.xi_injective;
      out["lands_in_kernel"] = rep.lands_in_kernel;
      out["equivariant"] = rep.equivariant;
      out["pass"] = rep.pass;
      print(out, pretty);
      return rep.pass ? 0 : 1;
    } else if (*nich_psi) {
      auto c = context();
      PsiReport rep = c->N->psi_check(*c->C);
      out["unitriangular"] = rep.unitriangular;
      out["relations_vanish"] = rep.relations_vanish;
      out["dims_match"] = rep.dims_match;
      out["pass"] = rep.pass;
      if (!rep.details.empty()) out["details"] = rep.details;
      print(out, pretty);
      return rep.pass ? 0 : 1;
    } else if (*os_dims) {
      auto c = context();
      OrlikSolomonAlgebra os(*c->g);
      OsReport rep = os.os_dims();
      out["dim_by_codim"] = rep.dim_by_codim;
      json flats = json::array();
      for (const auto& [x, d] : rep.dim_by_flat) {
        json e;
        e["flat"] = x;
        e["codim"] = os.intersection_lattice().codim(x);
        e["moebius"] = os.intersection_lattice().moebius(x);
        e["dim"] = d;
        flats.push_back(e);
      }
      out["flats"] = flats;
      out["whitney"] = os.intersection_lattice().whitney();
      // the NC / L(W) structural parallel, side by side
      auto c2 = context();
      json parallel;
      parallel["nc_moebius_abs"] = [&] {
        auto mu = c2->L->moebius_polynomial();
        std::vector<long> a(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) a[i] = std::labs(mu[i]);
        return a;
      }();
      parallel["intersection_whitney"] = os.intersection_lattice().whitney();
      out["nc_parallel"] = parallel;
      out["pass"] = rep.pass;
      print(out, pretty);
      return rep.pass ? 0 : 1;
    } else if (*verify_all) {
      VerifyOptions vopts = opts;
      vopts.resolution_degree = std::min(max_deg, 4);
      auto results = run_group_suite(GroupSpec::parse(group), vopts);
      out["checks"] = results_json(results);
      bool ok = all_pass(results);
      out["pass"] = ok;
      print(out, pretty);
      return ok ? 0 : 1;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    json err;
    err["error"] = "invalid argument";
    err["what"] = e.what();
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    json err;
    err["error"] = "falsified invariant";
    err["what"] = e.what();
    std::cout << err.dump() << "\n";
    return 1;
  }
}
