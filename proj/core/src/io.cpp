#include "indpro/io.hpp"

#include <utility>

#include "json.hpp"

namespace indpro::io {

namespace {

using json = nlohmann::ordered_json;

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void bad_field(const std::string& what) { throw parse_error(0, 0, what); }

json mat_to_json(const Mat& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.entries();
  return j;
}

Mat mat_from_json(PrimeField field, const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    bad_field(where + ": matrix needs rows, cols, entries");
  }
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  std::vector<std::uint32_t> entries;
  for (const auto& e : j.at("entries")) {
    long long v = e.get<long long>();
    if (v < 0 || std::uint64_t(v) >= field.modulus()) {
      throw semantic_error(where + ": matrix entry " + std::to_string(v) +
                           " is not a residue mod " + std::to_string(field.modulus()));
    }
    entries.push_back(std::uint32_t(v));
  }
  try {
    return Mat(field, rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw semantic_error(where + ": " + e.what());
  }
}

PrimeField field_from_json(const json& j) {
  if (!j.contains("p")) bad_field("document needs field modulus p");
  try {
    return PrimeField(j.at("p").get<std::uint32_t>());
  } catch (const std::invalid_argument& e) {
    throw semantic_error(e.what());
  }
}

std::string cell_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::pair<int, int> parse_cell_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) bad_field("bad cell key '" + key + "'");
  return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

json ind_payload(const IndWindow& x) {
  json j;
  std::vector<int> dims;
  for (int i = 0; i <= x.top(); ++i) dims.push_back(x.dim_at(i));
  j["dims"] = dims;
  json maps = json::array();
  for (int i = 0; i < x.top(); ++i) maps.push_back(mat_to_json(x.map_at(i)));
  j["maps"] = maps;
  return j;
}

IndWindow ind_from_payload(PrimeField field, const json& j, const std::string& where) {
  if (!j.contains("dims") || !j.contains("maps")) bad_field(where + ": needs dims and maps");
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  std::vector<Mat> maps;
  int k = 0;
  for (const auto& m : j.at("maps")) {
    maps.push_back(mat_from_json(field, m, where + ".maps[" + std::to_string(k++) + "]"));
  }
  try {
    return IndWindow(field, std::move(dims), std::move(maps));
  } catch (const std::invalid_argument& e) {
    throw semantic_error(where + ": " + e.what());
  }
}

json pro_payload(const ProWindow& y) {
  json j;
  std::vector<int> dims;
  for (int i = 0; i <= y.top(); ++i) dims.push_back(y.dim_at(i));
  j["dims"] = dims;
  json maps = json::array();
  for (int i = 0; i < y.top(); ++i) maps.push_back(mat_to_json(y.map_at(i)));
  j["maps"] = maps;
  return j;
}

ProWindow pro_from_payload(PrimeField field, const json& j, const std::string& where) {
  if (!j.contains("dims") || !j.contains("maps")) bad_field(where + ": needs dims and maps");
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  std::vector<Mat> maps;
  int k = 0;
  for (const auto& m : j.at("maps")) {
    maps.push_back(mat_from_json(field, m, where + ".maps[" + std::to_string(k++) + "]"));
  }
  try {
    return ProWindow(field, std::move(dims), std::move(maps));
  } catch (const std::invalid_argument& e) {
    throw semantic_error(where + ": " + e.what());
  }
}

json pi_payload(const PiWindow& x) {
  json j;
  j["lo"] = x.lo();
  j["hi"] = x.hi();
  json dims = json::object();
  json maps = json::object();
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int jj = i; jj <= x.hi(); ++jj) dims[cell_key(i, jj)] = x.dim(i, jj);
  }
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int jj = i + 1; jj <= x.hi(); ++jj) {
      maps["e:" + cell_key(i, jj)] = mat_to_json(x.epi(i, jj));
    }
    for (int jj = i; jj < x.hi(); ++jj) {
      maps["m:" + cell_key(i, jj)] = mat_to_json(x.mono(i, jj));
    }
  }
  j["dims"] = dims;
  j["maps"] = maps;
  return j;
}

PiWindow pi_from_payload(PrimeField field, const json& j, const std::string& where) {
  if (!j.contains("lo") || !j.contains("hi") || !j.contains("dims") || !j.contains("maps")) {
    bad_field(where + ": needs lo, hi, dims, maps");
  }
  int lo = j.at("lo").get<int>();
  int hi = j.at("hi").get<int>();
  if (lo > hi) throw semantic_error(where + ": lo > hi");
  try {
    PiWindowBuilder b(field, lo, hi);
    for (const auto& [key, val] : j.at("dims").items()) {
      auto [ci, cj] = parse_cell_key(key);
      b.set_dim(ci, cj, val.get<int>());
    }
    for (const auto& [key, val] : j.at("maps").items()) {
      if (key.size() < 2 || (key[0] != 'e' && key[0] != 'm') || key[1] != ':') {
        bad_field(where + ": map key '" + key + "' must start with e: or m:");
      }
      auto [ci, cj] = parse_cell_key(key.substr(2));
      Mat m = mat_from_json(field, val, where + ".maps[" + key + "]");
      if (key[0] == 'e') {
        b.set_epi(ci, cj, std::move(m));
      } else {
        b.set_mono(ci, cj, std::move(m));
      }
    }
    return b.build();
  } catch (const std::invalid_argument& e) {
    throw semantic_error(where + ": " + e.what());
  }
}

json square_payload(const CommutingSquare& s) {
  json j;
  j["m1"] = mat_to_json(s.a_to_b);
  j["e2"] = mat_to_json(s.a_to_d);
  j["e1"] = mat_to_json(s.b_to_c);
  j["m2"] = mat_to_json(s.d_to_c);
  return j;
}

CommutingSquare square_from_payload(PrimeField field, const json& j, const std::string& where) {
  for (const char* k : {"m1", "e2", "e1", "m2"}) {
    if (!j.contains(k)) bad_field(where + ": square needs m1, e2, e1, m2");
  }
  return CommutingSquare{mat_from_json(field, j.at("m1"), where + ".m1"),
                         mat_from_json(field, j.at("e2"), where + ".e2"),
                         mat_from_json(field, j.at("e1"), where + ".e1"),
                         mat_from_json(field, j.at("m2"), where + ".m2")};
}

json ses_payload(const SesTriple& t) {
  json j;
  j["mono"] = mat_to_json(t.mono);
  j["epi"] = mat_to_json(t.epi);
  return j;
}

SesTriple ses_from_payload(PrimeField field, const json& j, const std::string& where) {
  if (!j.contains("mono") || !j.contains("epi")) bad_field(where + ": needs mono and epi");
  return SesTriple{mat_from_json(field, j.at("mono"), where + ".mono"),
                   mat_from_json(field, j.at("epi"), where + ".epi")};
}

}  // namespace

Document doc_of(IndWindow x) { return Document{DocKind::ind_window, std::move(x)}; }
Document doc_of(ProWindow y) { return Document{DocKind::pro_window, std::move(y)}; }
Document doc_of(PiWindow x) { return Document{DocKind::pi_window, std::move(x)}; }
Document doc_of(IndRoof r) { return Document{DocKind::roof, std::move(r)}; }
Document doc_of(PiRoof r) { return Document{DocKind::u_roof, std::move(r)}; }
Document doc_of(SesTriple t) { return Document{DocKind::ses, std::move(t)}; }
Document doc_of(ThreeSquaresInstance inst) {
  return Document{DocKind::three_squares, std::move(inst)};
}

std::string serialize(const Document& doc) {
  json j;
  switch (doc.kind) {
    case DocKind::ind_window: {
      const auto& x = std::get<IndWindow>(doc.payload);
      j["kind"] = "ind_window";
      j["p"] = x.field().modulus();
      j.update(ind_payload(x));
      break;
    }
    case DocKind::pro_window: {
      const auto& y = std::get<ProWindow>(doc.payload);
      j["kind"] = "pro_window";
      j["p"] = y.field().modulus();
      j.update(pro_payload(y));
      break;
    }
    case DocKind::pi_window: {
      const auto& x = std::get<PiWindow>(doc.payload);
      j["kind"] = "pi_window";
      j["p"] = x.field().modulus();
      j.update(pi_payload(x));
      break;
    }
    case DocKind::roof: {
      const auto& r = std::get<IndRoof>(doc.payload);
      j["kind"] = "roof";
      j["p"] = r.src().field().modulus();
      j["phi"] = r.phi().window();
      j["source"] = ind_payload(r.src());
      j["target"] = ind_payload(r.dst());
      json comps = json::array();
      for (int i = 0; i <= r.stored_top(); ++i) comps.push_back(mat_to_json(r.component_at(i)));
      j["components"] = comps;
      break;
    }
    case DocKind::u_roof: {
      const auto& r = std::get<PiRoof>(doc.payload);
      j["kind"] = "u_roof";
      j["p"] = r.src().field().modulus();
      j["phi"] = json{{"lo", r.phi().lo()}, {"window", r.phi().window()}};
      j["grid_lo"] = r.grid_lo();
      j["grid_hi"] = r.grid_hi();
      j["source"] = pi_payload(r.src());
      j["target"] = pi_payload(r.dst());
      json comps = json::object();
      for (int i = r.grid_lo(); i <= r.grid_hi(); ++i) {
        for (int jj = i; jj <= r.grid_hi(); ++jj) {
          comps[cell_key(i, jj)] = mat_to_json(r.component_at(i, jj));
        }
      }
      j["components"] = comps;
      break;
    }
    case DocKind::ses: {
      const auto& t = std::get<SesTriple>(doc.payload);
      j["kind"] = "ses";
      j["p"] = t.mono.field().modulus();
      j.update(ses_payload(t));
      break;
    }
    case DocKind::three_squares: {
      const auto& inst = std::get<ThreeSquaresInstance>(doc.payload);
      j["kind"] = "three_squares";
      j["p"] = inst.ses_x.mono.field().modulus();
      j["primed"] = square_payload(inst.primed);
      j["middle"] = square_payload(inst.middle);
      j["double_primed"] = square_payload(inst.double_primed);
      j["ses_x"] = ses_payload(inst.ses_x);
      j["ses_y"] = ses_payload(inst.ses_y);
      j["ses_t"] = ses_payload(inst.ses_t);
      j["ses_z"] = ses_payload(inst.ses_z);
      break;
    }
  }
  return j.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? std::size_t(e.byte - 1) : 0);
    throw parse_error(line, col, e.what());
  }
  if (!j.is_object() || !j.contains("kind")) bad_field("document needs a kind tag");
  std::string kind = j.at("kind").get<std::string>();
  PrimeField field = field_from_json(j);
  try {
    if (kind == "ind_window") return doc_of(ind_from_payload(field, j, "ind_window"));
    if (kind == "pro_window") return doc_of(pro_from_payload(field, j, "pro_window"));
    if (kind == "pi_window") return doc_of(pi_from_payload(field, j, "pi_window"));
    if (kind == "ses") return doc_of(ses_from_payload(field, j, "ses"));
    if (kind == "roof") {
      if (!j.contains("phi") || !j.contains("source") || !j.contains("target") ||
          !j.contains("components")) {
        bad_field("roof needs phi, source, target, components");
      }
      CofinalMap phi(j.at("phi").get<std::vector<int>>());
      IndWindow src = ind_from_payload(field, j.at("source"), "roof.source");
      IndWindow dst = ind_from_payload(field, j.at("target"), "roof.target");
      std::vector<Mat> comps;
      int k = 0;
      for (const auto& m : j.at("components")) {
        comps.push_back(mat_from_json(field, m, "roof.components[" + std::to_string(k++) + "]"));
      }
      return doc_of(IndRoof(std::move(src), std::move(dst), std::move(phi), std::move(comps)));
    }
    if (kind == "u_roof") {
      for (const char* key : {"phi", "grid_lo", "grid_hi", "source", "target", "components"}) {
        if (!j.contains(key)) bad_field(std::string("u_roof needs ") + key);
      }
      BicofinalMap phi(j.at("phi").at("lo").get<int>(),
                       j.at("phi").at("window").get<std::vector<int>>());
      PiWindow src = pi_from_payload(field, j.at("source"), "u_roof.source");
      PiWindow dst = pi_from_payload(field, j.at("target"), "u_roof.target");
      int glo = j.at("grid_lo").get<int>();
      int ghi = j.at("grid_hi").get<int>();
      std::size_t n = std::size_t(ghi - glo + 1);
      std::vector<Mat> comps(n * n, Mat(field, 0, 0));
      for (const auto& [key, val] : j.at("components").items()) {
        auto [ci, cj] = parse_cell_key(key);
        comps[std::size_t(ci - glo) * n + std::size_t(cj - glo)] =
            mat_from_json(field, val, "u_roof.components[" + key + "]");
      }
      return doc_of(
          PiRoof(std::move(src), std::move(dst), std::move(phi), glo, ghi, std::move(comps)));
    }
    if (kind == "three_squares") {
      for (const char* key :
           {"primed", "middle", "double_primed", "ses_x", "ses_y", "ses_t", "ses_z"}) {
        if (!j.contains(key)) bad_field(std::string("three_squares needs ") + key);
      }
      return doc_of(ThreeSquaresInstance{
          square_from_payload(field, j.at("primed"), "primed"),
          square_from_payload(field, j.at("middle"), "middle"),
          square_from_payload(field, j.at("double_primed"), "double_primed"),
          ses_from_payload(field, j.at("ses_x"), "ses_x"),
          ses_from_payload(field, j.at("ses_y"), "ses_y"),
          ses_from_payload(field, j.at("ses_t"), "ses_t"),
          ses_from_payload(field, j.at("ses_z"), "ses_z")});
    }
  } catch (const std::invalid_argument& e) {
    throw semantic_error(e.what());
  }
  throw parse_error(0, 0, "unknown document kind '" + kind + "'");
}

bool operator==(const Document& a, const Document& b) {
  return a.kind == b.kind && a.payload == b.payload;
}

}  // namespace indpro::io
