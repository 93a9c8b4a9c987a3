#include "fiberbound/scheme_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "fiberbound/errors.hpp"

namespace fiberbound {

namespace {

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;  // of text's first character
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Strips leading/trailing blanks, advancing column past the leading ones.
Located trimmed(std::string_view s, std::size_t line, std::size_t column) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return Located{std::string(s.substr(a, b - a)), line, column + a};
}

std::vector<Located> words(const Located& v) {
  std::vector<Located> out;
  std::size_t i = 0;
  while (i < v.text.size()) {
    while (i < v.text.size() && (is_space(v.text[i]) || v.text[i] == ',')) ++i;
    std::size_t start = i;
    while (i < v.text.size() && !is_space(v.text[i]) && v.text[i] != ',') ++i;
    if (i > start) out.push_back(Located{v.text.substr(start, i - start), v.line, v.column + start});
  }
  return out;
}

std::optional<unsigned long> parse_unsigned(const std::string& s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoul(s);
}

}  // namespace

SchemeFile parse_scheme_file(std::string_view text, MonomialOrder default_order) {
  std::map<std::string, Located> keys;
  std::vector<Located> exprs;
  bool in_ideal = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Located line = trimmed(raw, line_no, 1);
    if (line.text.empty()) continue;

    if (is_space(raw.front())) {
      if (!in_ideal) throw ParseError("indented line outside the ideal block", line.line, line.column);
      exprs.push_back(line);
      continue;
    }
    in_ideal = false;
    auto colon = line.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line.line, line.column);
    std::string key = trimmed(line.text.substr(0, colon), line.line, line.column).text;
    Located value = trimmed(std::string_view(line.text).substr(colon + 1), line.line, line.column + colon + 1);
    if (key != "field" && key != "vars" && key != "order" && key != "dim" && key != "ideal")
      throw ParseError("unknown key '" + key + "'", line.line, line.column);
    if (keys.count(key)) throw ParseError("duplicate key '" + key + "'", line.line, line.column);
    if (key == "ideal") {
      if (!value.text.empty()) throw ParseError("ideal generators go on the following indented lines", value.line, value.column);
      in_ideal = true;
    }
    keys.emplace(key, value);
  }

  const std::size_t end_line = line_no;
  auto require = [&](const char* key) -> const Located& {
    auto it = keys.find(key);
    if (it == keys.end()) throw ParseError(std::string("missing '") + key + ":' line", end_line, 1);
    return it->second;
  };

  // field
  const Located& fv = require("field");
  auto fw = words(fv);
  FieldSpec field = FieldSpec::rationals();
  if (fw.size() == 1 && fw[0].text == "QQ") {
    field = FieldSpec::rationals();
  } else if (fw.size() == 2 && fw[0].text == "Fp") {
    auto p = parse_unsigned(fw[1].text);
    if (!p) throw ParseError("characteristic must be a positive integer", fw[1].line, fw[1].column);
    try {
      field = FieldSpec::prime(*p);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), fw[1].line, fw[1].column);
    }
  } else {
    throw ParseError("field must be 'QQ' or 'Fp <prime>'", fv.line, fv.column);
  }

  // vars
  const Located& vv = require("vars");
  std::vector<std::string> vars;
  for (const auto& w : words(vv)) {
    for (std::size_t i = 0; i < w.text.size(); ++i) {
      char c = w.text[i];
      bool ok = std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                (i > 0 && std::isdigit(static_cast<unsigned char>(c)));
      if (!ok) throw ParseError("invalid variable name '" + w.text + "'", w.line, w.column + i);
    }
    for (const auto& prev : vars)
      if (prev == w.text) throw ParseError("duplicate variable '" + w.text + "'", w.line, w.column);
    vars.push_back(w.text);
  }
  if (vars.empty()) throw ParseError("at least one variable is required", vv.line, vv.column);

  // order
  MonomialOrder order = default_order;
  bool declared = false;
  if (auto it = keys.find("order"); it != keys.end()) {
    auto o = parse_order(it->second.text);
    if (!o) throw ParseError("order must be grevlex, grlex or lex", it->second.line, it->second.column);
    order = *o;
    declared = true;
  }

  SchemeFile out;
  out.ring = PolyRing::make(field, vars, order);
  out.order_declared = declared;

  if (auto it = keys.find("dim"); it != keys.end()) {
    auto d = parse_unsigned(it->second.text);
    if (!d) throw ParseError("dim must be a nonnegative integer", it->second.line, it->second.column);
    out.dim = *d;
  }

  const Located& iv = require("ideal");
  if (exprs.empty()) throw ParseError("ideal block has no generators", iv.line, iv.column);
  for (const auto& e : exprs) {
    try {
      out.generators.push_back(parse_poly(e.text, out.ring));
    } catch (const ParseError& pe) {
      throw ParseError(pe.message(), e.line, e.column + pe.column() - 1);
    }
  }
  return out;
}

SchemeFile load_scheme_file(const std::filesystem::path& path, MonomialOrder default_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme_file(buf.str(), default_order);
}

}  // namespace fiberbound
