#include "subshift/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error("invalid-spec", (where.empty() ? std::string("/") : where) + ": " + what);
}

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) bad(where + "/" + k, "unknown key");
  }
}

const Json& need(const Json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) bad(where, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::size_t need_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) bad(where, "expected a count");
  return j.get<std::size_t>();
}

Word need_word(const Json& j, const Alphabet& a, const std::string& where) {
  const auto s = need_string(j, where);
  try {
    return a.parse(s);
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

Alphabet need_alphabet(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of letters");
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < j.size(); ++i) letters.push_back(need_string(j[i], where + "/" + std::to_string(i)));
  try {
    return Alphabet(letters);
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

std::vector<Word> need_words(const Json& j, const Alphabet& a, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of words");
  std::vector<Word> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(need_word(j[i], a, where + "/" + std::to_string(i)));
  return out;
}

Subshift spec_at(const Json& j, const std::string& where) {
  only_keys(j, where, {"kind", "alphabet", "forbidden", "background", "families", "factors"});
  const auto kind = need_string(need(j, where, "kind"), where + "/kind");
  const auto reject = [&](const char* key) {
    if (j.contains(key)) bad(where + "/" + key, "not allowed for kind \"" + kind + "\"");
  };
  if (kind == "sft") {
    reject("background");
    reject("families");
    reject("factors");
    const auto a = need_alphabet(need(j, where, "alphabet"), where + "/alphabet");
    const auto f = j.contains("forbidden") ? need_words(j.at("forbidden"), a, where + "/forbidden") : std::vector<Word>{};
    return build_sft(a, f);
  }
  if (kind == "sparse") {
    reject("factors");
    const auto a = need_alphabet(need(j, where, "alphabet"), where + "/alphabet");
    const auto bg_tok = need_string(need(j, where, "background"), where + "/background");
    const auto bg = a.find(bg_tok);
    if (!bg) bad(where + "/background", "letter not in the alphabet");
    const auto& fams = need(j, where, "families");
    if (!fams.is_array()) bad(where + "/families", "expected an array of letter lists");
    std::vector<std::vector<Letter>> families;
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const auto fw = where + "/families/" + std::to_string(i);
      if (!fams[i].is_array()) bad(fw, "expected an array of letters");
      std::vector<Letter> fam;
      for (std::size_t k = 0; k < fams[i].size(); ++k) {
        const auto c = a.find(need_string(fams[i][k], fw + "/" + std::to_string(k)));
        if (!c) bad(fw + "/" + std::to_string(k), "letter not in the alphabet");
        fam.push_back(*c);
      }
      families.push_back(std::move(fam));
    }
    auto x = build_sparse(a, *bg, families);
    if (j.contains("forbidden")) x = x.forbid(need_words(j.at("forbidden"), a, where + "/forbidden"));
    return x;
  }
  if (kind == "product") {
    reject("background");
    reject("families");
    const auto& fs = need(j, where, "factors");
    if (!fs.is_array() || fs.size() != 2) bad(where + "/factors", "expected two factor specs");
    auto x = product(spec_at(fs[0], where + "/factors/0"), spec_at(fs[1], where + "/factors/1"));
    if (j.contains("alphabet") && !(need_alphabet(j.at("alphabet"), where + "/alphabet") == x.alphabet()))
      bad(where + "/alphabet", "does not match the pair alphabet of the factors");
    if (j.contains("forbidden")) x = x.forbid(need_words(j.at("forbidden"), x.alphabet(), where + "/forbidden"));
    return x;
  }
  bad(where + "/kind", "expected \"sft\", \"sparse\" or \"product\"");
}

Json words_json(const std::vector<Word>& ws, const Alphabet& a) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(a.format(w));
  return out;
}

}  // namespace

Subshift spec_from_json(const Json& j) { return spec_at(j, ""); }

Json spec_to_json(const Subshift& x) {
  Json j;
  const auto& a = x.alphabet();
  switch (x.kind()) {
    case Subshift::Kind::sft:
      j["kind"] = "sft";
      j["alphabet"] = a.letters();
      j["forbidden"] = words_json(x.forbidden(), a);
      break;
    case Subshift::Kind::sparse: {
      j["kind"] = "sparse";
      j["alphabet"] = a.letters();
      j["background"] = a.token(x.background());
      Json fams = Json::array();
      for (const auto& f : x.families()) {
        Json fam = Json::array();
        for (auto c : f) fam.push_back(a.token(c));
        fams.push_back(fam);
      }
      j["families"] = fams;
      if (!x.forbidden().empty()) j["forbidden"] = words_json(x.forbidden(), a);
      break;
    }
    case Subshift::Kind::product:
      j["kind"] = "product";
      j["factors"] = Json::array({spec_to_json(x.left()), spec_to_json(x.right())});
      if (!x.forbidden().empty()) j["forbidden"] = words_json(x.forbidden(), a);
      break;
  }
  return j;
}

BlockCode code_from_json(const Json& j, const Subshift& x) {
  only_keys(j, "", {"range", "alphabet", "rule"});
  const auto range = need_count(need(j, "", "range"), "/range");
  if (j.contains("alphabet") && !(need_alphabet(j.at("alphabet"), "/alphabet") == x.alphabet()))
    bad("/alphabet", "does not match the subshift's alphabet");
  const auto& rule = need(j, "", "rule");
  if (!rule.is_object()) bad("/rule", "expected an object from windows to letters");
  const auto& a = x.alphabet();
  const auto& windows = x.language(2 * range + 1);
  std::vector<Letter> out(windows.size());
  std::vector<bool> seen(windows.size(), false);
  for (const auto& [key, val] : rule.items()) {
    const auto where = "/rule/" + key;
    Word w;
    try {
      w = a.parse(key);
    } catch (const Error& e) {
      bad(where, e.what());
    }
    auto it = std::lower_bound(windows.begin(), windows.end(), w);
    if (it == windows.end() || *it != w) bad(where, "window is not in L_" + std::to_string(2 * range + 1) + "(X)");
    const auto c = a.find(need_string(val, where));
    if (!c) bad(where, "letter not in the alphabet");
    const auto i = static_cast<std::size_t>(it - windows.begin());
    out[i] = *c;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < windows.size(); ++i)
    if (!seen[i]) throw Error("rule-incomplete", "/rule: no entry for window \"" + a.format(windows[i]) + "\"");
  return BlockCode(x, range, std::move(out));
}

Json code_to_json(const BlockCode& phi) {
  Json j;
  const auto& a = phi.alphabet();
  j["range"] = phi.range();
  j["alphabet"] = a.letters();
  Json rule = Json::object();
  for (std::size_t i = 0; i < phi.windows().size(); ++i) rule[a.format(phi.windows()[i])] = a.token(phi.outputs()[i]);
  j["rule"] = rule;
  return j;
}

Configuration configuration_from_json(const Json& j, const Alphabet& a) {
  only_keys(j, "", {"left", "center", "right", "origin_offset"});
  const auto left = need_word(need(j, "", "left"), a, "/left");
  const auto center = j.contains("center") ? need_word(j.at("center"), a, "/center") : Word{};
  const auto right = need_word(need(j, "", "right"), a, "/right");
  const auto& off = need(j, "", "origin_offset");
  if (!off.is_number_integer()) bad("/origin_offset", "expected an integer");
  if (left.empty() || right.empty()) bad("", "periodic tails must be nonempty");
  return Configuration(left, center, right, off.get<std::int64_t>());
}

Json configuration_to_json(const Configuration& x, const Alphabet& a) {
  Json j;
  j["left"] = a.format(x.left_period());
  j["center"] = a.format(x.center());
  j["right"] = a.format(x.right_period());
  j["origin_offset"] = x.origin_offset();
  return j;
}

Json chain_to_json(const Chain& c) {
  const auto& a = c.terminal ? c.terminal->subshift.alphabet() : c.levels.at(0).subshift.alphabet();
  Json j;
  j["range"] = c.range;
  j["max_len"] = c.max_len;
  j["max_len_extended"] = c.max_len_extended();
  j["k"] = c.k();
  Json levels = Json::array();
  std::vector<Word> so_far;
  const auto level = [&](const ChainLevel& l) {
    Json e;
    e["forbidden_so_far"] = words_json(so_far, a);
    e["w"] = a.format(l.w);
    e["w_tilde"] = a.format(l.w_tilde);
    so_far.push_back(l.w_tilde);
    return e;
  };
  for (const auto& l : c.levels) levels.push_back(level(l));
  j["levels"] = levels;
  j["terminal"] = c.terminal ? level(*c.terminal) : Json(nullptr);
  const auto bound = [&](const ChainBound& b) {
    Json e;
    e["length"] = b.length;
    e["complexity"] = b.complexity;
    e["check"] = std::to_string(c.k()) + " < " + std::to_string(b.complexity) + "/" + std::to_string(b.length);
    e["holds"] = b.holds;
    return e;
  };
  Json bounds;
  bounds["L"] = bound(c.bound_on_w);
  bounds["L_prime"] = bound(c.bound_on_w_tilde);
  bounds["sharpening"] = c.sharpening;
  bounds["sharpening_holds"] = c.sharpening_holds;
  j["bounds"] = bounds;
  return j;
}

Json table_to_json(const ComplexityTable& t) {
  Json j;
  j["subshift"] = t.subshift_id;
  Json rows = Json::array();
  for (std::size_t n = 1; n <= t.max_n(); ++n) rows.push_back(Json{{"n", n}, {"P", t.at(n)}});
  j["values"] = rows;
  return j;
}

std::string table_to_csv(const ComplexityTable& t) {
  std::string out = "n,P\n";
  for (std::size_t n = 1; n <= t.max_n(); ++n) out += std::to_string(n) + "," + std::to_string(t.at(n)) + "\n";
  return out;
}

Json window_to_json(const SpaceTimeWindow& w, const Alphabet& a) {
  Json j;
  j["col_start"] = w.col_start;
  j["row_start"] = w.row_start;
  j["width"] = w.width;
  j["height"] = w.height;
  j["alphabet"] = a.letters();
  Json grid = Json::array();
  for (const auto& row : w.grid) {
    Json r = Json::array();
    for (auto c : row) r.push_back(a.token(c));
    grid.push_back(r);
  }
  j["grid"] = grid;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json_file(const std::string& path) {
  const auto text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("invalid-json", path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io-error", "cannot write " + tmp);
    out << content;
    if (!out) throw Error("io-error", "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("io-error", "cannot rename " + tmp + ": " + ec.message());
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void export_example(const NamedSystem& s, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "codes");
  fs::create_directories(fs::path(dir) / "probes");
  write_file_atomic((fs::path(dir) / "spec.json").string(), spec_to_json(s.spec).dump(2) + "\n");
  for (const auto& [name, code] : s.codes)
    write_file_atomic((fs::path(dir) / "codes" / (name + ".json")).string(), code_to_json(code).dump(2) + "\n");
  for (const auto& [name, p] : s.probes)
    write_file_atomic((fs::path(dir) / "probes" / (name + ".json")).string(),
                      configuration_to_json(p, s.spec.alphabet()).dump(2) + "\n");
}

}  // namespace subshift
