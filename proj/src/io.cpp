#include "alphapoly/io.hpp"

#include <json.hpp>

#include <limits>
#include <map>

#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rat rat_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const schema_error& e) {
      throw schema_error(std::string(what) + ": " + e.what());
    }
  }
  throw schema_error(std::string(what) +
                     ": rationals must be integers or \"p/q\" strings");
}

ordered_json rat_to_json(const Rat& q) {
  const Int num = numerator(q);
  if (denominator(q) == 1 &&
      num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max())
    return ordered_json(num.convert_to<long long>());
  return ordered_json(rat_string(q));
}

QVec vec_from_json(const json& j, int rank, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw schema_error(std::string(what) + ": expected an array of length " +
                       std::to_string(rank));
  QVec v;
  for (const json& e : j) v.push_back(rat_from_json(e, what));
  return v;
}

ordered_json vec_to_json(const QVec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& q : v) a.push_back(rat_to_json(q));
  return a;
}

void require_keys(const json& j, const std::vector<std::string>& allowed,
                  const char* what) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const std::string& k : allowed)
      if (item.key() == k) {
        ok = true;
        break;
      }
    if (!ok)
      throw schema_error(std::string(what) + ": unknown key \"" + item.key() +
                         "\"");
  }
}

}  // namespace

InputDocument parse_input_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw schema_error("document must be a JSON object");
  require_keys(j,
               {"schema_version", "name", "rank", "root_system",
                "lattice_basis", "polytope", "fano", "labels"},
               "document");

  InputDocument doc;
  if (!j.contains("schema_version") ||
      !j["schema_version"].is_number_integer() || j["schema_version"] != 1)
    throw schema_error("schema_version must be the integer 1");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw schema_error("name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw schema_error("rank must be an integer");
  doc.rank = j["rank"].get<int>();
  if (doc.rank < 1) throw schema_error("rank must be at least 1");

  if (j.contains("root_system") && !j["root_system"].is_null()) {
    const json& rs = j["root_system"];
    if (!rs.is_object()) throw schema_error("root_system must be an object");
    require_keys(rs, {"factors", "roots"}, "root_system");
    if (rs.contains("factors") && rs.contains("roots"))
      throw schema_error("root_system takes factors or roots, not both");
    if (rs.contains("factors")) {
      if (!rs["factors"].is_array())
        throw schema_error("root_system.factors must be an array");
      for (const json& f : rs["factors"]) {
        if (!f.is_object()) throw schema_error("factor must be an object");
        require_keys(f, {"type", "offset"}, "factor");
        RootFactor rf;
        if (!f.contains("type") || !f["type"].is_string())
          throw schema_error("factor.type must be a string");
        rf.type = f["type"].get<std::string>();
        if (f.contains("offset")) {
          if (!f["offset"].is_number_integer())
            throw schema_error("factor.offset must be an integer");
          rf.offset = f["offset"].get<int>();
        }
        doc.factors.push_back(std::move(rf));
      }
    } else if (rs.contains("roots")) {
      if (!rs["roots"].is_array())
        throw schema_error("root_system.roots must be an array");
      std::vector<QVec> roots;
      for (const json& r : rs["roots"])
        roots.push_back(vec_from_json(r, doc.rank, "root"));
      doc.explicit_roots = std::move(roots);
    }
  }

  if (j.contains("lattice_basis") && !j["lattice_basis"].is_null()) {
    const json& lb = j["lattice_basis"];
    if (!lb.is_array() || static_cast<int>(lb.size()) != doc.rank)
      throw schema_error("lattice_basis must list rank column vectors");
    std::vector<QVec> cols;
    for (const json& c : lb)
      cols.push_back(vec_from_json(c, doc.rank, "lattice_basis column"));
    doc.lattice_basis = std::move(cols);
  }

  if (!j.contains("polytope") || !j["polytope"].is_object())
    throw schema_error("polytope must be an object");
  const json& pt = j["polytope"];
  require_keys(pt, {"inequalities", "vertices"}, "polytope");
  if (pt.contains("inequalities") == pt.contains("vertices"))
    throw schema_error("polytope takes exactly one of inequalities/vertices");
  if (pt.contains("inequalities")) {
    if (!pt["inequalities"].is_array() || pt["inequalities"].empty())
      throw schema_error("polytope.inequalities must be a nonempty array");
    std::vector<Facet> fs;
    for (const json& f : pt["inequalities"]) {
      if (!f.is_object()) throw schema_error("inequality must be an object");
      require_keys(f, {"constant", "normal"}, "inequality");
      if (!f.contains("constant") || !f.contains("normal"))
        throw schema_error("inequality needs constant and normal");
      Facet fac;
      fac.constant = rat_from_json(f["constant"], "constant");
      fac.normal = vec_from_json(f["normal"], doc.rank, "normal");
      fs.push_back(std::move(fac));
    }
    doc.inequalities = std::move(fs);
  } else {
    if (!pt["vertices"].is_array() || pt["vertices"].empty())
      throw schema_error("polytope.vertices must be a nonempty array");
    std::vector<QVec> vs;
    for (const json& v : pt["vertices"])
      vs.push_back(vec_from_json(v, doc.rank, "vertex"));
    doc.vertex_list = std::move(vs);
  }

  if (j.contains("fano")) {
    if (!j["fano"].is_boolean()) throw schema_error("fano must be a boolean");
    doc.fano = j["fano"].get<bool>();
  }
  return doc;
}

std::string serialize_input_document(const InputDocument& doc) {
  ordered_json j;
  j["schema_version"] = 1;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["rank"] = doc.rank;
  if (doc.explicit_roots) {
    ordered_json roots = ordered_json::array();
    for (const QVec& r : *doc.explicit_roots) roots.push_back(vec_to_json(r));
    j["root_system"] = ordered_json{{"roots", std::move(roots)}};
  } else if (!doc.factors.empty()) {
    ordered_json fs = ordered_json::array();
    for (const RootFactor& f : doc.factors)
      fs.push_back(ordered_json{{"type", f.type}, {"offset", f.offset}});
    j["root_system"] = ordered_json{{"factors", std::move(fs)}};
  }
  if (doc.lattice_basis) {
    ordered_json cols = ordered_json::array();
    for (const QVec& c : *doc.lattice_basis) cols.push_back(vec_to_json(c));
    j["lattice_basis"] = std::move(cols);
  }
  if (doc.inequalities) {
    ordered_json rows = ordered_json::array();
    for (const Facet& f : *doc.inequalities)
      rows.push_back(ordered_json{{"constant", rat_to_json(f.constant)},
                                  {"normal", vec_to_json(f.normal)}});
    j["polytope"] = ordered_json{{"inequalities", std::move(rows)}};
  } else if (doc.vertex_list) {
    ordered_json rows = ordered_json::array();
    for (const QVec& v : *doc.vertex_list) rows.push_back(vec_to_json(v));
    j["polytope"] = ordered_json{{"vertices", std::move(rows)}};
  }
  j["fano"] = doc.fano;
  return j.dump(2) + "\n";
}

namespace {

// Rows of the basis matrix (columns b_j as given in the document).
Matrix basis_matrix(const std::vector<QVec>& cols) {
  const int r = static_cast<int>(cols.size());
  Matrix m(r, QVec(r));
  for (int i = 0; i < r; ++i)
    for (int jj = 0; jj < r; ++jj) m[i][jj] = cols[jj][i];
  return m;
}

// Weight-side change of coordinates: v' = B^{-1} v.
QVec to_lattice(const Matrix& bmat, const QVec& v) {
  const auto x = solve_linear(bmat, v);
  if (!x) throw schema_error("lattice basis is singular");
  return *x;
}

// Primal-side change of coordinates: u' = B^T u (the pairing <u, v> is
// preserved against v' = B^{-1} v).
QVec pullback_primal(const std::vector<QVec>& cols, const QVec& u) {
  QVec out;
  for (const QVec& c : cols) out.push_back(dot(c, u));
  return out;
}

RootData transform_root_data(const RootData& rd,
                             const std::vector<QVec>& cols,
                             const Matrix& bmat) {
  RootData out = rd;
  for (Root& r : out.positive) {
    r.alpha = to_lattice(bmat, r.alpha);
    if (!is_integer_vec(r.alpha))
      throw schema_error("roots do not lie in the chosen lattice");
    r.coroot = pullback_primal(cols, r.coroot);
  }
  out.rho = to_lattice(bmat, rd.rho);
  out.two_rho = to_lattice(bmat, rd.two_rho);
  Matrix corows, alpharows;
  for (const Root& r : out.positive) {
    corows.push_back(r.coroot);
    alpharows.push_back(r.alpha);
  }
  out.center_dual = null_space(corows, rd.rank);
  out.center_primal = null_space(alpharows, rd.rank);
  return out;
}

}  // namespace

CompactificationData compactification_from_document(const InputDocument& doc) {
  RootData rd = doc.explicit_roots
                    ? build_root_data(doc.rank, *doc.explicit_roots)
                    : build_root_data(doc.rank, doc.factors);

  std::vector<QVec> cols;
  Matrix bmat;
  if (doc.lattice_basis) {
    cols = *doc.lattice_basis;
    for (const QVec& c : cols)
      if (!is_integer_vec(c))
        throw schema_error("lattice_basis columns must be integer vectors");
    bmat = basis_matrix(cols);
    if (matrix_rank(bmat) != doc.rank)
      throw schema_error("lattice basis is singular");
    rd = transform_root_data(rd, cols, bmat);
  }

  HPolytope p;
  if (doc.inequalities) {
    std::vector<Facet> fs = *doc.inequalities;
    if (doc.lattice_basis)
      for (Facet& f : fs) f.normal = pullback_primal(cols, f.normal);
    p = make_hpolytope(doc.rank, fs);
  } else {
    VPolytope vp;
    vp.rank = doc.rank;
    for (const QVec& v : *doc.vertex_list)
      vp.vertices.push_back(doc.lattice_basis ? to_lattice(bmat, v) : v);
    std::sort(vp.vertices.begin(), vp.vertices.end(), lex_less);
    vp.vertices.erase(std::unique(vp.vertices.begin(), vp.vertices.end()),
                      vp.vertices.end());
    p = dual_description(vp);
  }
  return make_compactification(rd, p, doc.fano, doc.name);
}

// ---------------------------------------------------------------------------
// Bundled documents.  data/ ships the same texts.

namespace {

const std::map<std::string, const char*>& builtin_map() {
  static const std::map<std::string, const char*> docs = {
      {"cp1xcp1", R"({
  "schema_version": 1,
  "name": "cp1xcp1",
  "rank": 2,
  "polytope": {
    "inequalities": [
      {"constant": 1, "normal": [1, 0]},
      {"constant": 1, "normal": [-1, 0]},
      {"constant": 1, "normal": [0, 1]},
      {"constant": 1, "normal": [0, -1]}
    ]
  },
  "fano": true
}
)"},
      {"cp2", R"({
  "schema_version": 1,
  "name": "cp2",
  "rank": 2,
  "polytope": {
    "inequalities": [
      {"constant": 1, "normal": [1, 0]},
      {"constant": 1, "normal": [0, 1]},
      {"constant": 1, "normal": [-1, -1]}
    ]
  },
  "fano": true
}
)"},
      {"cp2-blowup2", R"({
  "schema_version": 1,
  "name": "cp2-blowup2",
  "rank": 2,
  "polytope": {
    "inequalities": [
      {"constant": 1, "normal": [-1, -1]},
      {"constant": 1, "normal": [-1, 0]},
      {"constant": 1, "normal": [0, -1]},
      {"constant": 1, "normal": [1, 0]},
      {"constant": 1, "normal": [0, 1]}
    ]
  },
  "fano": true
}
)"},
      {"cp3", R"({
  "schema_version": 1,
  "name": "cp3",
  "rank": 3,
  "polytope": {
    "inequalities": [
      {"constant": 1, "normal": [1, 0, 0]},
      {"constant": 1, "normal": [0, 1, 0]},
      {"constant": 1, "normal": [0, 0, 1]},
      {"constant": 1, "normal": [-1, -1, -1]}
    ]
  },
  "fano": true
}
)"},
      {"gl2-toroidal", R"({
  "schema_version": 1,
  "name": "gl2-toroidal",
  "rank": 2,
  "root_system": {"factors": [{"type": "A1", "offset": 0}]},
  "polytope": {
    "inequalities": [
      {"constant": 1, "normal": [1, 1]},
      {"constant": 1, "normal": [-1, -1]},
      {"constant": 2, "normal": [-1, 0]},
      {"constant": 2, "normal": [0, -1]}
    ]
  },
  "fano": true
}
)"}};
  return docs;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : builtin_map()) names.push_back(k);
  return names;
}

std::string builtin_document(const std::string& name) {
  const auto it = builtin_map().find(name);
  if (it == builtin_map().end())
    throw schema_error("unknown bundled document \"" + name + "\"");
  return it->second;
}

InputDocument cpn_document(int n) {
  if (n < 1) throw schema_error("projective dimension must be at least 1");
  InputDocument doc;
  doc.name = "cp" + std::to_string(n);
  doc.rank = n;
  std::vector<Facet> fs;
  for (int i = 0; i < n; ++i) {
    Facet f;
    f.constant = Rat(1);
    f.normal = zero_vec(n);
    f.normal[i] = Rat(1);
    fs.push_back(std::move(f));
  }
  Facet last;
  last.constant = Rat(1);
  last.normal = QVec(n, Rat(-1));
  fs.push_back(std::move(last));
  doc.inequalities = std::move(fs);
  doc.fano = true;
  return doc;
}

}  // namespace alphapoly
