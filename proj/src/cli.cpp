#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphapoly/io.hpp"

namespace alphapoly {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw schema_error("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inputs name either a file on disk or a bundled document.
std::string load_document_text(const std::string& input) {
  if (std::filesystem::exists(input)) return read_file(input);
  const std::vector<std::string> names = builtin_names();
  if (std::find(names.begin(), names.end(), input) != names.end())
    return builtin_document(input);
  throw schema_error("cannot read \"" + input +
                     "\" (not a file or a bundled document name)");
}

ordered_json vec_json(const QVec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& q : v) a.push_back(rat_string(q));
  return a;
}

ordered_json vecs_json(const std::vector<QVec>& vs) {
  ordered_json a = ordered_json::array();
  for (const QVec& v : vs) a.push_back(vec_json(v));
  return a;
}

ordered_json witness_json(const AlphaWitness& w) {
  ordered_json j;
  j["kind"] = w.kind;
  if (w.point) j["point"] = vec_json(*w.point);
  if (w.second) j["second"] = vec_json(*w.second);
  if (w.facet) j["facet"] = *w.facet;
  return j;
}

ordered_json alpha_json(const AlphaValue& a) {
  ordered_json j;
  j["alpha"] = rat_string(a.value);
  j["capped"] = a.capped;
  j["witness"] = witness_json(a.witness);
  return j;
}

std::string alpha_text(const std::string& label, const AlphaValue& a) {
  std::string s = label + " = " + rat_string(a.value);
  if (a.capped) s += " (capped)";
  if (a.witness.kind == "empty") s += " (empty admissible interval)";
  s += "\n";
  const AlphaWitness& w = a.witness;
  if (w.point) {
    s += "witness: " + w.kind + " " + vec_string(*w.point);
    if (w.second) s += " and " + vec_string(*w.second);
    if (w.facet) s += ", facet " + std::to_string(*w.facet);
    s += "\n";
  }
  return s;
}

struct Options {
  std::string input;
  std::string out_path;
  std::string weights_path;
  std::string point_text;
  std::string mode_text = "dim";
  std::string golden_dir;
  long m = 1;
  long k = 1;
  long max_m = 10;
  int cpn = 0;
  int threads = 1;
  bool json = false;
};

ordered_json report_skeleton(const std::string& command,
                             const CompactificationData& data,
                             const std::string& input) {
  ordered_json r;
  r["schema_version"] = 1;
  r["command"] = command;
  r["input"] = data.name.empty() ? input : data.name;
  r["parameters"] = ordered_json::object();
  r["results"] = ordered_json::object();
  r["witnesses"] = ordered_json::object();
  r["warnings"] = ordered_json::array();
  for (const std::string& w : data.warnings) r["warnings"].push_back(w);
  return r;
}

std::string warnings_text(const CompactificationData& data) {
  std::string s;
  for (const std::string& w : data.warnings) s += "warning: " + w + "\n";
  return s;
}

std::vector<QVec> load_weights(const std::string& path, int rank) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(std::string("invalid weights JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("weights")) j = j["weights"];
  if (!j.is_array() || j.empty())
    throw schema_error("weights file must hold a nonempty array of vectors");
  std::vector<QVec> ws;
  for (const nlohmann::json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      throw schema_error("weight vectors must have length " +
                         std::to_string(rank));
    QVec v;
    for (const nlohmann::json& e : row) {
      if (e.is_number_integer())
        v.push_back(rat(e.get<long long>()));
      else if (e.is_string())
        v.push_back(parse_rat(e.get<std::string>()));
      else
        throw schema_error("weights must be integers or \"p/q\" strings");
    }
    ws.push_back(std::move(v));
  }
  return ws;
}

QVec parse_point(const std::string& text, int rank) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != rank)
    throw schema_error("point must have " + std::to_string(rank) +
                       " comma-separated coordinates");
  QVec v;
  for (const std::string& p : parts) v.push_back(parse_rat(p));
  return v;
}

DimMode mode_from_text(const std::string& text) {
  return text == "block" ? DimMode::BlockCount : DimMode::TrueDimension;
}

// ---------------------------------------------------------------------------
// Command bodies.  Each fills the report and returns the text rendering.

std::string run_alpha(const CompactificationData& data, ordered_json& r) {
  const AlphaValue a = alpha_group(data);
  r["results"]["alpha"] = rat_string(a.value);
  r["results"]["capped"] = a.capped;
  r["witnesses"]["alpha"] = witness_json(a.witness);
  return alpha_text("alpha", a);
}

std::string run_alpha_delcroix(const CompactificationData& data,
                               ordered_json& r) {
  const AlphaValue a = alpha_group_delcroix(data);
  r["results"]["alpha"] = rat_string(a.value);
  r["results"]["capped"] = a.capped;
  r["witnesses"]["alpha"] = witness_json(a.witness);
  return alpha_text("alpha", a);
}

std::string run_alpha_mk(const CompactificationData& data, const Options& o,
                         ordered_json& r) {
  r["parameters"]["m"] = o.m;
  r["parameters"]["k"] = o.k;
  r["parameters"]["mode"] = o.mode_text;
  const AlphaMkResult res =
      alpha_mk(data, o.m, o.k, mode_from_text(o.mode_text), o.threads);
  if (res.empty) {
    r["results"]["empty"] = true;
    return "no admissible weight set of total size " + std::to_string(o.k) +
           "\n";
  }
  r["results"]["empty"] = false;
  r["results"]["alpha"] = rat_string(res.alpha.value);
  r["results"]["capped"] = res.alpha.capped;
  r["witnesses"]["minimizer"] = vecs_json(res.minimizer);
  r["witnesses"]["alpha"] = witness_json(res.alpha.witness);
  std::string text = alpha_text(
      "alpha_mk(m=" + std::to_string(o.m) + ", k=" + std::to_string(o.k) + ")",
      res.alpha);
  text += "minimizer:";
  for (const QVec& v : res.minimizer) text += " " + vec_string(v);
  text += "\n";
  return text;
}

std::string run_alpha_pi(const CompactificationData& data, const Options& o,
                         ordered_json& r) {
  const std::vector<QVec> ws = load_weights(o.weights_path, data.polytope.rank);
  r["parameters"]["m"] = o.m;
  r["parameters"]["weights"] = vecs_json(ws);
  const AlphaValue a = data.fano ? alpha_pi_fano(data, o.m, ws)
                                 : alpha_pi_general(data, o.m, ws);
  r["results"]["alpha"] = rat_string(a.value);
  r["results"]["capped"] = a.capped;
  r["witnesses"]["alpha"] = witness_json(a.witness);
  return alpha_text("alpha_pi(m=" + std::to_string(o.m) +
                        ", |I|=" + std::to_string(ws.size()) + ")",
                    a);
}

std::string run_toric_alpha(const CompactificationData& data,
                            ordered_json& r) {
  const AlphaValue a = alpha_toric(data);
  r["results"]["alpha"] = rat_string(a.value);
  r["results"]["capped"] = a.capped;
  r["witnesses"]["alpha"] = witness_json(a.witness);
  return alpha_text("alpha", a);
}

std::string run_t(const CompactificationData& data, const Options& o,
                  ordered_json& r) {
  const QVec x = parse_point(o.point_text, data.polytope.rank);
  r["parameters"]["point"] = vec_json(x);
  const Rat t = t_function(data.polytope, x);
  r["results"]["t"] = rat_string(t);
  return "t" + vec_string(x) + " = " + rat_string(t) + "\n";
}

ordered_json face_json(const Face& f) {
  ordered_json j;
  j["vertices"] = vecs_json(f.vertices);
  j["dim"] = f.dim;
  j["facet_indices"] = f.facet_indices;
  j["is_facet"] = f.is_facet;
  return j;
}

std::string face_text(const Face& f) {
  std::string s = "- dim " + std::to_string(f.dim) + ", facets {";
  for (std::size_t i = 0; i < f.facet_indices.size(); ++i)
    s += (i ? ", " : "") + std::to_string(f.facet_indices[i]);
  s += "}, vertices";
  for (const QVec& v : f.vertices) s += " " + vec_string(v);
  return s + "\n";
}

std::string run_min_faces(const CompactificationData& data, ordered_json& r) {
  const FaceSet fs = min_face_set(data);
  r["results"]["alpha"] = rat_string(fs.alpha);
  ordered_json faces = ordered_json::array();
  for (const Face& f : fs.faces) faces.push_back(face_json(f));
  r["results"]["faces"] = std::move(faces);
  std::string text = "alpha = " + rat_string(fs.alpha) + "\nminimizing faces: " +
                     std::to_string(fs.faces.size()) + "\n";
  for (const Face& f : fs.faces) text += face_text(f);
  return text;
}

std::string conjecture_text(const ConjectureResult& c) {
  if (c.holds)
    return "holds: m_k = " + std::to_string(c.m_k) + " (facet " +
           std::to_string(c.facet) + ")\n";
  return "fails (" + c.note + ")\n";
}

std::string run_conjecture(const CompactificationData& data, const Options& o,
                           ordered_json& r) {
  r["parameters"]["k"] = o.k;
  r["parameters"]["max_m"] = o.max_m;
  const ConjectureResult c = conjecture_check(data, o.k, o.max_m);
  r["results"]["holds"] = c.holds;
  if (c.holds) {
    r["results"]["m_k"] = c.m_k;
    r["results"]["facet"] = c.facet;
  } else {
    r["results"]["note"] = c.note;
  }
  return conjecture_text(c);
}

std::string run_quantize_m0(const CompactificationData& data,
                            ordered_json& r) {
  const QuantizationResult q = quantization_m0(data);
  r["results"]["m0"] = q.m0.str();
  r["results"]["v_z0"] = vec_json(q.v_z0);
  r["results"]["alpha"] = rat_string(q.alpha.value);
  r["results"]["capped"] = q.alpha.capped;
  r["witnesses"]["alpha"] = witness_json(q.alpha.witness);
  return "m0 = " + q.m0.str() + "\nv_z0 = " + vec_string(q.v_z0) + "\n" +
         alpha_text("alpha", q.alpha);
}

bool toric_reflexive(const CompactificationData& data) {
  if (!data.roots.toric()) return false;
  for (const Facet& f : data.polytope.facets)
    if (f.constant != 1) return false;
  for (const QVec& v : data.vertices.vertices)
    if (!is_integer_vec(v)) return false;
  return true;
}

std::string run_report_all(const CompactificationData& data, const Options& o,
                           ordered_json& r) {
  std::string text;
  const AlphaValue a = alpha_group(data);
  r["results"]["alpha"] = alpha_json(a);
  text += alpha_text("alpha", a);

  const QuantizationResult q = quantization_m0(data);
  ordered_json qj;
  qj["m0"] = q.m0.str();
  qj["v_z0"] = vec_json(q.v_z0);
  r["results"]["quantization"] = std::move(qj);
  text += "m0 = " + q.m0.str() + ", v_z0 = " + vec_string(q.v_z0) + "\n";

  if (data.fano) {
    const AlphaValue d = alpha_group_delcroix(data);
    r["results"]["delcroix"] = alpha_json(d);
    text += alpha_text("alpha (erosion route)", d);
  }

  if (toric_reflexive(data)) {
    const AlphaValue ta = alpha_toric(data);
    r["results"]["toric_alpha"] = alpha_json(ta);
    text += alpha_text("toric alpha", ta);

    const FaceSet fs = min_face_set(data);
    ordered_json faces = ordered_json::array();
    for (const Face& f : fs.faces) faces.push_back(face_json(f));
    r["results"]["min_faces"] = std::move(faces);
    text += "minimizing faces: " + std::to_string(fs.faces.size()) + "\n";

    const ConjectureResult c = conjecture_check(data, 2, 10);
    ordered_json cj;
    cj["k"] = 2;
    cj["holds"] = c.holds;
    if (c.holds) {
      cj["m_k"] = c.m_k;
      cj["facet"] = c.facet;
    } else {
      cj["note"] = c.note;
    }
    r["results"]["conjecture_k2"] = std::move(cj);
    text += "conjecture (k=2): " + conjecture_text(c);
  }

  long mk_level = 1;
  if (q.m0 > 1 && q.m0 <= 64) mk_level = q.m0.convert_to<long>();
  const AlphaMkResult mk =
      alpha_mk(data, mk_level, 1, DimMode::TrueDimension, o.threads);
  ordered_json mj;
  mj["m"] = mk_level;
  mj["k"] = 1;
  if (mk.empty) {
    mj["empty"] = true;
  } else {
    mj["empty"] = false;
    mj["alpha"] = rat_string(mk.alpha.value);
    mj["capped"] = mk.alpha.capped;
    mj["minimizer"] = vecs_json(mk.minimizer);
  }
  r["results"]["alpha_mk"] = std::move(mj);
  if (!mk.empty)
    text += alpha_text("alpha_mk(m=" + std::to_string(mk_level) + ", k=1)",
                       mk.alpha);
  return text;
}

std::string run_emit_goldens(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.golden_dir, ec);
  if (ec && !fs::is_directory(o.golden_dir))
    throw schema_error("cannot create directory \"" + o.golden_dir + "\"");

  std::vector<std::pair<std::string, std::string>> docs;  // name, text
  for (const std::string& name : builtin_names())
    docs.emplace_back(name, builtin_document(name));
  if (o.cpn > 0) {
    const std::string name = "cp" + std::to_string(o.cpn);
    const std::vector<std::string> names = builtin_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      docs.emplace_back(name, serialize_input_document(cpn_document(o.cpn)));
  }

  std::string text;
  for (const auto& [name, doc_text] : docs) {
    const fs::path input_path = fs::path(o.golden_dir) / (name + ".input.json");
    const fs::path report_path =
        fs::path(o.golden_dir) / (name + ".report.json");
    {
      std::ofstream f(input_path, std::ios::binary);
      if (!f) throw schema_error("cannot write \"" + input_path.string() + "\"");
      f << doc_text;
    }
    const CompactificationData data =
        compactification_from_document(parse_input_document(doc_text));
    ordered_json r = report_skeleton("report-all", data, name);
    run_report_all(data, o, r);
    {
      std::ofstream f(report_path, std::ios::binary);
      if (!f)
        throw schema_error("cannot write \"" + report_path.string() + "\"");
      f << r.dump(2) << "\n";
    }
    text += "wrote " + input_path.string() + "\n";
    text += "wrote " + report_path.string() + "\n";
  }
  out << text;
  return text;
}

void emit_report(const Options& o, const ordered_json& report,
                 const std::string& text, std::ostream& out) {
  const std::string payload = o.json ? report.dump(2) + "\n" : text;
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw schema_error("cannot write \"" + o.out_path + "\"");
    f << payload;
  } else {
    out << payload;
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Exact alpha-invariants of polarized group compactifications"};
  app.name("alpha-polytope");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", o.input,
                      "input document (file path or bundled name)")
          ->required();
    sub->add_flag("--json", o.json, "emit a machine-readable report");
    sub->add_option("--out", o.out_path, "write the report to FILE");
    sub->add_option("--threads", o.threads, "worker threads for sweeps")
        ->envname("ALPHA_POLYTOPE_THREADS");
  };

  CLI::App* c_alpha = app.add_subcommand("alpha", "group-symmetric alpha");
  add_common(c_alpha);
  CLI::App* c_delcroix = app.add_subcommand(
      "alpha-delcroix", "group-symmetric alpha via polytope erosion");
  add_common(c_delcroix);
  CLI::App* c_mk = app.add_subcommand(
      "alpha-mk", "minimum of alpha over weight sets of total size k");
  add_common(c_mk);
  c_mk->add_option("--m", o.m, "level")->required();
  c_mk->add_option("--k", o.k, "total size of the weight set")->required();
  c_mk->add_option("--mode", o.mode_text, "size accounting: block or dim")
      ->check(CLI::IsMember({"block", "dim"}));
  CLI::App* c_pi =
      app.add_subcommand("alpha-pi", "alpha along a given weight set");
  add_common(c_pi);
  c_pi->add_option("--m", o.m, "level")->required();
  c_pi->add_option("--weights", o.weights_path,
                   "JSON file with the weight vectors")
      ->required();
  CLI::App* c_toric =
      app.add_subcommand("toric-alpha", "toric alpha via the t-function");
  add_common(c_toric);
  CLI::App* c_t = app.add_subcommand("t", "evaluate the t-function");
  add_common(c_t);
  c_t->add_option("--point", o.point_text, "point as \"a/b,c/d,...\"")
      ->required();
  CLI::App* c_faces = app.add_subcommand(
      "min-faces", "faces on which the t-function attains its minimum");
  add_common(c_faces);
  CLI::App* c_conj = app.add_subcommand(
      "conjecture", "least level whose minimizing facet holds k points");
  add_common(c_conj);
  c_conj->add_option("--k", o.k, "required lattice point count")->required();
  c_conj->add_option("--max-m", o.max_m, "search bound on the level");
  CLI::App* c_quant = app.add_subcommand(
      "quantize-m0", "least level realizing the group alpha");
  add_common(c_quant);
  CLI::App* c_all =
      app.add_subcommand("report-all", "every applicable invariant at once");
  add_common(c_all);
  CLI::App* c_gold = app.add_subcommand(
      "emit-goldens", "write input/report pairs for the bundled documents");
  c_gold->add_option("directory", o.golden_dir, "output directory")
      ->required();
  c_gold->add_option("--cpn", o.cpn,
                     "also emit the projective-space document of dimension N")
      ->check(CLI::PositiveNumber);
  add_common(c_gold, /*with_input=*/false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_gold->parsed()) {
      run_emit_goldens(o, out);
      return 0;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const CompactificationData data =
        compactification_from_document(parse_input_document(
            load_document_text(o.input)));
    ordered_json r = report_skeleton(app.get_subcommands().front()->get_name(),
                                     data, o.input);
    std::string text;
    if (c_alpha->parsed())
      text = run_alpha(data, r);
    else if (c_delcroix->parsed())
      text = run_alpha_delcroix(data, r);
    else if (c_mk->parsed())
      text = run_alpha_mk(data, o, r);
    else if (c_pi->parsed())
      text = run_alpha_pi(data, o, r);
    else if (c_toric->parsed())
      text = run_toric_alpha(data, r);
    else if (c_t->parsed())
      text = run_t(data, o, r);
    else if (c_faces->parsed())
      text = run_min_faces(data, r);
    else if (c_conj->parsed())
      text = run_conjecture(data, o, r);
    else if (c_quant->parsed())
      text = run_quantize_m0(data, r);
    else if (c_all->parsed())
      text = run_report_all(data, o, r);
    const auto t1 = std::chrono::steady_clock::now();
    r["timing_ms"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count());
    emit_report(o, r, warnings_text(data) + text, out);
    return 0;
  } catch (const schema_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariance_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace alphapoly
