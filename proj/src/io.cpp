#include "arrangements/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace arr {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_unsigned() && v.get<std::uint64_t>() <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(v.get<std::uint64_t>());
  fail(path, "expected an integer");
}

}  // namespace

Arrangement parse_arrangement_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }

  Ring ring;
  const json& r = member(doc, "", "ring");
  if (r.is_string()) {
    if (r.get<std::string>() != "Z") fail("/ring", "expected \"Z\" or {\"prime\": p}");
    ring = Ring::integers();
  } else {
    const auto p = integer(member(r, "/ring", "prime"), "/ring/prime");
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max() || !is_prime(static_cast<std::uint64_t>(p)))
      fail("/ring/prime", std::to_string(p) + " is not prime");
    ring = Ring{static_cast<std::uint32_t>(p)};
  }

  const json& space = member(doc, "", "space");
  const json& kind = member(space, "/space", "kind");
  Ambient ambient;
  if (kind == "affine") ambient = Ambient::affine;
  else if (kind == "projective") ambient = Ambient::projective;
  else fail("/space/kind", "expected \"affine\" or \"projective\"");
  const auto n = integer(member(space, "/space", "n"), "/space/n");
  if (n < 1 || n > 64) fail("/space/n", "n must be between 1 and 64");

  const json& subs = member(doc, "", "subspaces");
  if (!subs.is_array()) fail("/subspaces", "expected an array");
  std::vector<FormGroup> groups;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string gpath = "/subspaces/" + std::to_string(i);
    if (!subs[i].is_array() || subs[i].empty()) fail(gpath, "subspace " + std::to_string(i) + ": expected a nonempty array of forms");
    FormGroup g;
    for (std::size_t k = 0; k < subs[i].size(); ++k) {
      const std::string fpath = gpath + "/" + std::to_string(k);
      const json& f = subs[i][k];
      if (!f.is_array()) fail(fpath, "expected an array of coefficients");
      if (f.size() != static_cast<std::size_t>(n) + 1)
        fail(fpath, "subspace " + std::to_string(i) + ": form has " + std::to_string(f.size()) +
                        " coefficients, expected n + 1 = " + std::to_string(n + 1));
      LinearForm form;
      for (std::size_t j = 0; j < f.size(); ++j) form.coeffs.push_back(integer(f[j], fpath + "/" + std::to_string(j)));
      if (ambient == Ambient::projective && form.constant() != 0)
        fail(fpath, "subspace " + std::to_string(i) + ": projective forms must have c0 = 0");
      g.push_back(std::move(form));
    }
    groups.push_back(std::move(g));
  }

  std::string name;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("/name", "expected a string");
    name = it->get<std::string>();
  }
  try {
    return Arrangement(ring, ambient, static_cast<int>(n), std::move(groups), std::move(name));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("/subspaces: ") + e.what());
  }
}

Arrangement load_arrangement_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_arrangement_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json arrangement_to_json(const Arrangement& a) {
  nlohmann::ordered_json out;
  if (!a.name().empty()) out["name"] = a.name();
  if (a.ring().is_integers()) out["ring"] = "Z";
  else out["ring"] = {{"prime", a.ring().prime}};
  out["space"] = {{"kind", to_string(a.ambient())}, {"n", a.n()}};
  auto subs = nlohmann::ordered_json::array();
  for (const auto& g : a.subspaces()) {
    auto forms = nlohmann::ordered_json::array();
    for (const auto& f : g) forms.push_back(f.coeffs);
    subs.push_back(std::move(forms));
  }
  out["subspaces"] = std::move(subs);
  return out;
}

std::string serialize_arrangement(const Arrangement& a) {
  // One form per line keeps generated files readable.
  const auto j = arrangement_to_json(a);
  std::ostringstream out;
  out << "{\n";
  if (j.contains("name")) out << "  \"name\": " << j["name"].dump() << ",\n";
  out << "  \"ring\": " << j["ring"].dump() << ",\n";
  out << "  \"space\": " << j["space"].dump() << ",\n";
  out << "  \"subspaces\": [";
  const auto& subs = j["subspaces"];
  for (std::size_t i = 0; i < subs.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t k = 0; k < subs[i].size(); ++k) out << (k ? ", " : "") << subs[i][k].dump();
    out << "]";
  }
  out << (subs.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

}  // namespace arr
