#include "conecalc/job.hpp"

#include <chrono>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "conecalc/suites.hpp"
#include "conecalc/updown.hpp"
#include "conecalc/vfc.hpp"

namespace conecalc {
namespace {

using Json = nlohmann::ordered_json;

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(where + " is missing '" + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const char* key,
                        const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string())
    throw input_error(where + "." + key + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array())
    throw input_error(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string())
      throw input_error(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<int> int_list(const Json& v, const std::string& where) {
  if (!v.is_array())
    throw input_error(where + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw input_error(where + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

int int_or(const Json& params, const char* key, int fallback) {
  if (!params.contains(key)) return fallback;
  const Json& v = params.at(key);
  if (!v.is_number_integer())
    throw input_error(std::string("params.") + key + " must be an integer");
  return v.get<int>();
}

Json params_of(const Json& job) {
  if (!job.contains("params")) return Json::object();
  const Json& p = job.at("params");
  if (!p.is_object()) throw input_error("job.params must be an object");
  return p;
}

BaseSpace parse_base(const Json& job) {
  const Json& ring = need(job, "ring", "job");
  std::vector<std::string> vars =
      string_list(need(ring, "variables", "job.ring"), "job.ring.variables");
  bool projective = false;
  if (ring.contains("projective")) {
    if (!ring.at("projective").is_boolean())
      throw input_error("job.ring.projective must be a boolean");
    projective = ring.at("projective").get<bool>();
  }
  std::vector<std::string> gens;
  if (job.contains("ideal")) gens = string_list(job.at("ideal"), "job.ideal");
  return make_base(vars, gens, projective);
}

std::vector<std::string> default_names(const RingPtr& r, size_t k) {
  std::vector<std::string> out;
  for (size_t i = 0; i < k; ++i) {
    std::string name = "N" + std::to_string(i);
    while (r->index_of(name) >= 0) name += "_2";
    out.push_back(name);
  }
  return out;
}

std::vector<std::string> ideal_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const Poly& p : I.groebner().elems) out.push_back(poly_str(p));
  return out;
}

Json chow_json(const ChowClass& a) {
  Json coeffs = Json::object();
  for (size_t m = 0; m < a.coeffs.size(); ++m)
    if (!(a.coeffs[m] == 0)) coeffs[std::to_string(m)] = rat_str(a.coeffs[m]);
  Json out;
  out["ambient"] = a.ambient;
  out["coeffs"] = coeffs;
  out["display"] = chow_str(a);
  return out;
}

Json cone_json(const Cone& c) {
  std::vector<std::string> coords;
  for (int i = 0; i < c.ambient.rank(); ++i)
    coords.push_back(c.ambient.ring->vars[c.ambient.coords[i]].name);
  Json out;
  out["coordinates"] = coords;
  out["twists"] = c.ambient.twists;
  out["ideal"] = ideal_strings(c.ideal);
  return out;
}

struct TaskResult {
  Json result;
  std::string summary;
};

TaskResult do_normal_cone(const Json& job, const Json& params) {
  BaseSpace b = parse_base(job);
  if (b.ideal.gens().empty())
    throw input_error("normal-cone needs a nonempty ideal");
  std::vector<std::string> names;
  if (params.contains("coordinates"))
    names = string_list(params.at("coordinates"), "params.coordinates");
  else
    names = default_names(b.ring, b.ideal.gens().size());
  Cone c = normal_cone(b, b.ideal.gens(), names);
  int dim = cone_dimension(c);

  TaskResult tr;
  tr.result["cone"] = cone_json(c);
  tr.result["dimension"] = dim;
  tr.summary = "normal cone on " + std::to_string(names.size()) +
               " conormal coordinates, dimension " + std::to_string(dim);
  return tr;
}

TaskResult do_segre(const Json& job, uint64_t seed) {
  BaseSpace b = parse_base(job);
  EmbeddedScheme x = make_embedded(b);
  const std::vector<Poly>& gens = x.space.ideal.gens();
  Cone c = normal_cone(x.space, gens, default_names(x.space.ring, gens.size()));
  ChowClass s = segre_class(c, seed);

  TaskResult tr;
  tr.result["segre"] = chow_json(s);
  tr.result["ambient_dimension"] = x.ambient_dim;
  tr.summary = "s(X) = " + chow_str(s);
  return tr;
}

TaskResult do_fulton(const Json& job, uint64_t seed) {
  BaseSpace b = parse_base(job);
  EmbeddedScheme x = make_embedded(b);
  ChowClass f = fulton_class(x, seed);

  TaskResult tr;
  tr.result["fulton"] = chow_json(f);
  tr.result["ambient_dimension"] = x.ambient_dim;
  tr.summary = "c_F(X) = " + chow_str(f);
  return tr;
}

TaskResult do_vfc(const Json& job, const Json& params, uint64_t seed) {
  BaseSpace b = parse_base(job);
  EmbeddedScheme x = make_embedded(b);

  NormalSpaceData ns;
  std::string kind =
      params.contains("kind") ? need_string(params, "kind", "params") : "section";
  if (kind == "smooth") {
    ns = smooth_identity();
  } else if (kind == "section") {
    std::vector<int> twists =
        int_list(need(params, "twists", "params"), "params.twists");
    std::vector<std::string> section =
        string_list(need(params, "section", "params"), "params.section");
    ns = section_of_bundle(twists, parse_polys(b.ring, section));
  } else {
    throw input_error("unknown vfc kind: " + kind +
                      " (expected 'section' or 'smooth')");
  }

  VfcResult direct = vfc_direct(x, ns, seed);
  VfcResult closed = vfc_closed_formula(x, ns, seed);
  bool agree = chow_equal(direct.vfc, closed.vfc);

  TaskResult tr;
  tr.result["rank"] = direct.rank;
  tr.result["cone_dimension"] = direct.cone_dimension;
  tr.result["vfc"] = chow_json(direct.vfc);
  tr.result["fulton"] = chow_json(direct.fulton);
  tr.result["closed_formula_agrees"] = agree;
  tr.summary = "virtual dimension " + std::to_string(direct.rank) +
               ", [X]^vir = " + chow_str(direct.vfc);
  if (!agree) tr.summary += "  (closed formula disagrees)";
  return tr;
}

LinearSpace parse_space(const BaseSpace& b, const Json& spec,
                        const std::string& where) {
  std::vector<std::string> names =
      string_list(need(spec, "names", where), where + ".names");
  std::vector<int> twists(names.size(), 0);
  if (spec.contains("twists")) {
    twists = int_list(spec.at("twists"), where + ".twists");
    if (twists.size() != names.size())
      throw input_error(where + ": twists and names disagree in length");
  }
  return free_space(b, names, twists);
}

std::vector<std::vector<Poly>> parse_matrix(const RingPtr& r, const Json& m,
                                            const std::string& where) {
  if (!m.is_array()) throw input_error(where + " must be an array of rows");
  std::vector<std::vector<Poly>> out;
  for (const auto& row : m) {
    std::vector<Poly> prow;
    for (const auto& s : string_list(row, where + " rows"))
      prow.push_back(parse_poly(r, s));
    out.push_back(std::move(prow));
  }
  return out;
}

TwoTermComplex parse_complex(const BaseSpace& b, const Json& spec,
                             const std::string& where) {
  LinearSpace e0 = parse_space(b, need(spec, "e0", where), where + ".e0");
  LinearSpace e1 = parse_space(b, need(spec, "e1", where), where + ".e1");
  LinSpaceHom d = linspace_hom(
      e0, e1, parse_matrix(b.ring, need(spec, "d", where), where + ".d"));
  return two_term_complex(e0, e1, d);
}

ComplexSquare parse_square(const BaseSpace& b, const Json& spec,
                           const std::string& where) {
  TwoTermComplex src = parse_complex(b, need(spec, "src", where), where + ".src");
  TwoTermComplex dst = parse_complex(b, need(spec, "dst", where), where + ".dst");
  LinSpaceHom phi0 = linspace_hom(
      src.e0, dst.e0,
      parse_matrix(b.ring, need(spec, "phi0", where), where + ".phi0"));
  LinSpaceHom phi1 = linspace_hom(
      src.e1, dst.e1,
      parse_matrix(b.ring, need(spec, "phi1", where), where + ".phi1"));
  return complex_square(src, dst, phi0, phi1);
}

LinSpaceHom parse_hom(const BaseSpace& b, const Json& spec,
                      const std::string& where) {
  LinearSpace src = parse_space(b, need(spec, "src", where), where + ".src");
  LinearSpace dst = parse_space(b, need(spec, "dst", where), where + ".dst");
  return linspace_hom(
      src, dst,
      parse_matrix(b.ring, need(spec, "matrix", where), where + ".matrix"));
}

Cone parse_cone(const LinearSpace& e, const Json& gens,
                const std::string& where) {
  return make_cone(e, parse_polys(e.ring, string_list(gens, where)));
}

TaskResult do_cone_op(const Json& job, const Json& params) {
  BaseSpace b = parse_base(job);
  std::string op = need_string(params, "op", "params");
  TaskResult tr;
  tr.result["op"] = op;

  if (op == "going-up" || op == "going-down") {
    ComplexSquare s =
        parse_square(b, need(params, "square", "params"), "params.square");
    const LinearSpace& in_space = op == "going-up" ? s.dst.e1 : s.src.e1;
    Cone c = parse_cone(in_space, need(params, "cone", "params"), "params.cone");
    Cone r = op == "going-up" ? going_up(s, c) : going_down(s, c);
    tr.result["cone"] = cone_json(r);
    tr.summary = op + ": cone cut by " +
                 std::to_string(r.ideal.groebner().elems.size()) + " equations";
    return tr;
  }
  if (op == "going-down-derived") {
    ComplexSquare theta =
        parse_square(b, need(params, "theta", "params"), "params.theta");
    ComplexSquare psi =
        parse_square(b, need(params, "psi", "params"), "params.psi");
    DerivedMorphism dm{theta.dst, theta, psi};
    Cone c =
        parse_cone(psi.src.e1, need(params, "cone", "params"), "params.cone");
    Cone r = going_down_derived(dm, c);
    tr.result["cone"] = cone_json(r);
    tr.summary = op + ": cone cut by " +
                 std::to_string(r.ideal.groebner().elems.size()) + " equations";
    return tr;
  }
  if (op == "descend-check") {
    LinSpaceHom p = parse_hom(b, need(params, "hom", "params"), "params.hom");
    Cone c = parse_cone(p.src, need(params, "cone", "params"), "params.cone");
    DescendResult dr = descend_check(p, c);
    tr.result["descends"] = dr.descends;
    tr.result["cone"] = dr.descends ? cone_json(dr.candidate) : Json(nullptr);
    tr.summary = dr.descends ? "cone descends along the projection"
                             : "cone does not descend";
    return tr;
  }
  if (op == "is-econe") {
    LinSpaceHom a =
        parse_hom(b, need(params, "action", "params"), "params.action");
    Cone c = parse_cone(a.dst, need(params, "cone", "params"), "params.cone");
    bool e = is_econe(c, a);
    tr.result["is_econe"] = e;
    tr.summary = e ? "cone is invariant under the action"
                   : "cone is not invariant under the action";
    return tr;
  }
  throw input_error("unknown cone-op: " + op);
}

struct CheckOutput {
  Json result;
  std::string summary;
  bool clean = true;
  std::string first_failure;
  std::vector<std::string> dump_paths;
};

CheckOutput do_check(const Json& params, uint64_t seed,
                     const JobOptions& opt) {
  std::vector<std::string> names = suite_names();
  if (params.contains("suites"))
    names = string_list(params.at("suites"), "params.suites");

  SuiteOptions sopt;
  sopt.seed = seed;
  sopt.count = int_or(params, "count", sopt.count);
  sopt.start_index = int_or(params, "start_index", sopt.start_index);
  if (params.contains("mutated")) {
    if (!params.at("mutated").is_boolean())
      throw input_error("params.mutated must be a boolean");
    sopt.mutated = params.at("mutated").get<bool>();
  }

  CheckOutput out;
  Json rows = Json::array();
  for (const auto& name : names) {
    SuiteOutcome so = run_suite(name, sopt);
    Json row;
    row["suite"] = so.suite;
    row["run"] = so.run;
    row["passed"] = so.passed;
    std::string line =
        so.suite + ": " + std::to_string(so.passed) + "/" + std::to_string(so.run);
    if (so.ok()) {
      row["failed_index"] = nullptr;
    } else {
      row["failed_index"] = so.failed_index;
      row["note"] = so.note;
      Json inst = Json::object();
      for (const auto& [k, v] : so.instance) inst[k] = v;
      row["instance"] = inst;

      Json replay;
      replay["schema"] = "conecalc-job/1";
      replay["task"] = "check";
      Json rp;
      rp["suites"] = Json::array({so.suite});
      rp["seed"] = sopt.seed;
      rp["start_index"] = so.failed_index;
      rp["count"] = 1;
      rp["mutated"] = sopt.mutated;
      rp["instance"] = inst;  // readable echo; replay regenerates from the seed
      replay["params"] = rp;
      std::string path = opt.dump_dir + "/conecalc-replay-" + so.suite + "-" +
                         std::to_string(so.failed_index) + ".json";
      std::ofstream f(path);
      if (!f) throw input_error("cannot write replay file: " + path);
      f << replay.dump(2) << "\n";
      out.dump_paths.push_back(path);

      line += "  FAILED at " + std::to_string(so.failed_index) + " (" + so.note +
              "), replay: " + path;
      if (out.clean)
        out.first_failure = "suite " + so.suite + " failed at instance " +
                            std::to_string(so.failed_index) +
                            "; replay written to " + path;
      out.clean = false;
    }
    rows.push_back(row);
    if (!out.summary.empty()) out.summary += "\n";
    out.summary += line;
  }
  out.result["suites"] = rows;
  return out;
}

uint64_t task_default_seed(const std::string& task) {
  if (task == "check") return kSuiteSeed;
  if (task == "segre" || task == "fulton" || task == "vfc") return kClassSeed;
  return 0;
}

}  // namespace

JobOutcome run_job(const std::string& job_text, const JobOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  JobOutcome out;
  Json report;
  report["schema"] = "conecalc-report/1";

  try {
    Json job;
    try {
      job = Json::parse(job_text);
    } catch (const Json::exception& e) {
      throw input_error(std::string("job is not valid JSON: ") + e.what());
    }
    std::string schema = need_string(job, "schema", "job");
    if (schema != "conecalc-job/1")
      throw input_error("unsupported job schema: " + schema);
    std::string task = need_string(job, "task", "job");
    report["task"] = task;

    Json params = params_of(job);
    uint64_t seed = task_default_seed(task);
    if (params.contains("seed")) {
      if (!params.at("seed").is_number_integer() &&
          !params.at("seed").is_number_unsigned())
        throw input_error("params.seed must be an integer");
      seed = params.at("seed").get<uint64_t>();
    }
    if (opt.seed) seed = *opt.seed;
    report["seed"] = seed;

    if (task == "check") {
      CheckOutput c = do_check(params, seed, opt);
      report["ok"] = c.clean;
      report["result"] = c.result;
      out.dump_paths = c.dump_paths;
      out.summary = c.summary;
      if (!c.clean) {
        report["error"] =
            Json{{"kind", "applicability"}, {"message", c.first_failure}};
        out.exit_code = 3;
      }
    } else {
      TaskResult tr;
      if (task == "normal-cone") {
        tr = do_normal_cone(job, params);
      } else if (task == "segre") {
        tr = do_segre(job, seed);
      } else if (task == "fulton") {
        tr = do_fulton(job, seed);
      } else if (task == "vfc") {
        tr = do_vfc(job, params, seed);
      } else if (task == "cone-op") {
        tr = do_cone_op(job, params);
      } else {
        throw input_error("unknown task: " + task);
      }
      report["ok"] = true;
      report["result"] = tr.result;
      out.summary = tr.summary;
    }
  } catch (const input_error& e) {
    report["ok"] = false;
    report["error"] = Json{{"kind", "input"}, {"message", e.what()}};
    out.exit_code = 2;
    out.summary = std::string("error: ") + e.what();
  } catch (const applicability_error& e) {
    report["ok"] = false;
    report["error"] = Json{{"kind", "applicability"}, {"message", e.what()}};
    out.exit_code = 3;
    out.summary = std::string("error: ") + e.what();
  } catch (const genericity_error& e) {
    report["ok"] = false;
    report["error"] = Json{{"kind", "genericity"}, {"message", e.what()}};
    out.exit_code = 4;
    out.summary = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    report["ok"] = false;
    report["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
    out.exit_code = 1;
    out.summary = std::string("internal error: ") + e.what();
  }

  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  report["timings_ms"] = Json{{"total", ms}};
  out.report = report.dump(2) + "\n";
  return out;
}

}  // namespace conecalc
