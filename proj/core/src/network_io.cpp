#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "crn/network.hpp"
#include "json.hpp"

namespace crn {

namespace {

using nlohmann::json;

struct Term {
  std::string species;
  Rational coeff;
};

struct RawReaction {
  std::string name;
  std::vector<Term> lhs, rhs;
  bool reversible = false;
  std::optional<double> kf, kr;
  std::size_t line = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && is_space(s[a])) ++a;
  std::size_t b = s.size();
  while (b > a && is_space(s[b - 1])) --b;
  if (offset) *offset += a;
  return s.substr(a, b - a);
}

bool valid_species_char(char c) {
  return !is_space(c) && c != '+' && c != ':' && c != ';' && c != '#' && c != '<' && c != '>' && c != '=' &&
         c != ',' && c != '"';
}

std::vector<Term> parse_side(std::string_view side, std::size_t line, std::size_t col) {
  std::vector<Term> terms;
  std::size_t off = 0;
  std::string_view body = trim(side, &off);
  if (body.empty() || body == "0" || body == "\xE2\x88\x85") return terms;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = body.find('+', start);
    std::string_view raw = body.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    std::size_t term_col = col + off + start;
    std::string_view term = trim(raw, &term_col);
    if (term.empty()) throw ParseError(line, term_col + 1, "empty species term");
    std::size_t k = 0;
    while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/' || term[k] == '.'))
      ++k;
    Rational coeff = 1;
    if (k > 0) {
      try {
        coeff = parse_rational(term.substr(0, k));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, term_col + 1, e.what());
      }
    }
    std::size_t name_col = term_col + k;
    std::string_view name = trim(term.substr(k), &name_col);
    if (name.empty()) throw ParseError(line, name_col + 1, "missing species name");
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw ParseError(line, name_col + 1, "species name must start with a letter or '_'");
    for (std::size_t c = 0; c < name.size(); ++c)
      if (!valid_species_char(name[c]))
        throw ParseError(line, name_col + c + 1, std::string("unexpected character '") + name[c] + "'");
    if (sgn(coeff) <= 0) throw ParseError(line, term_col + 1, "stoichiometric coefficient must be positive");
    terms.push_back({std::string(name), coeff});
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return terms;
}

bool looks_like_options(std::string_view seg) {
  std::string_view t = trim(seg);
  return t.rfind("kf", 0) == 0 || t.rfind("kr", 0) == 0;
}

void parse_options(std::string_view seg, RawReaction& r, std::size_t line, std::size_t col) {
  std::istringstream in{std::string(seg)};
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line, col + 1, "expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    double x = 0;
    try {
      std::size_t used = 0;
      x = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(line, col + 1, "bad rate constant '" + val + "'");
    }
    if (!(x > 0)) throw ParseError(line, col + 1, "rate constants must be positive");
    if (key == "kf")
      r.kf = x;
    else if (key == "kr")
      r.kr = x;
    else
      throw ParseError(line, col + 1, "unknown option '" + key + "'");
  }
}

RawReaction parse_reaction(std::string_view seg, std::size_t line, std::size_t col, std::size_t index) {
  RawReaction r;
  r.line = line;
  std::size_t arrow = std::string_view::npos, arrow_len = 0;
  for (std::string_view a : {"<->", "<=>"}) {
    auto p = seg.find(a);
    if (p != std::string_view::npos && p < arrow) {
      arrow = p;
      arrow_len = 3;
      r.reversible = true;
    }
  }
  if (arrow == std::string_view::npos)
    for (std::string_view a : {"->", "=>"}) {
      auto p = seg.find(a);
      if (p != std::string_view::npos && p < arrow) {
        arrow = p;
        arrow_len = 2;
      }
    }
  if (arrow == std::string_view::npos) throw ParseError(line, col + 1, "missing reaction arrow ('->' or '<->')");
  std::string_view left = seg.substr(0, arrow);
  std::size_t left_col = col;
  if (auto colon = left.find(':'); colon != std::string_view::npos) {
    std::size_t name_col = col;
    std::string_view name = trim(left.substr(0, colon), &name_col);
    if (name.empty()) throw ParseError(line, name_col + 1, "empty reaction name");
    for (std::size_t c = 0; c < name.size(); ++c)
      if (is_space(name[c]) || name[c] == ';' || name[c] == '#')
        throw ParseError(line, name_col + c + 1, "reaction names may not contain whitespace");
    r.name = std::string(name);
    left = left.substr(colon + 1);
    left_col = col + colon + 1;
  } else {
    r.name = "R" + std::to_string(index + 1);
  }
  r.lhs = parse_side(left, line, left_col);
  r.rhs = parse_side(seg.substr(arrow + arrow_len), line, col + arrow + arrow_len);
  if (r.lhs.empty() && r.rhs.empty()) throw ParseError(line, col + 1, "reaction has no species");
  return r;
}

ReactionNetwork assemble(const std::vector<RawReaction>& raw, std::string source) {
  std::vector<std::string> species;
  std::map<std::string, std::size_t> index;
  for (const auto& r : raw)
    for (const auto* side : {&r.lhs, &r.rhs})
      for (const auto& t : *side)
        if (index.emplace(t.species, species.size()).second) species.push_back(t.species);
  const std::size_t n = species.size(), m = raw.size();
  QMatrix reac(n, m), prod(n, m);
  std::vector<std::string> names;
  std::vector<bool> rev;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& t : raw[j].lhs) reac(index[t.species], j) += t.coeff;
    for (const auto& t : raw[j].rhs) prod(index[t.species], j) += t.coeff;
    names.push_back(raw[j].name);
    rev.push_back(raw[j].reversible);
    if (!raw[j].reversible && raw[j].kr)
      throw ParseError(raw[j].line, 1, "irreversible reaction '" + raw[j].name + "' cannot carry kr");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (names[a] == names[b]) throw ParseError(raw[b].line, 1, "duplicate reaction name '" + names[b] + "'");
  ReactionNetwork net;
  try {
    net = make_network(std::move(species), std::move(names), std::move(reac), std::move(prod), std::move(rev),
                       std::move(source));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, 0, e.what());
  }
  for (std::size_t j = 0; j < m; ++j) {
    net.kf[j] = raw[j].kf;
    net.kr[j] = raw[j].kr;
  }
  return net;
}

ReactionNetwork parse_crn(std::string_view text, std::string source) {
  std::vector<RawReaction> raw;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t seg_start = 0;
    while (seg_start <= line.size()) {
      std::size_t semi = line.find(';', seg_start);
      std::string_view seg =
          line.substr(seg_start, semi == std::string_view::npos ? std::string_view::npos : semi - seg_start);
      if (!trim(seg).empty()) {
        if (looks_like_options(seg)) {
          if (raw.empty() || raw.back().line != line_no)
            throw ParseError(line_no, seg_start + 1, "rate options must follow a reaction on the same line");
          parse_options(seg, raw.back(), line_no, seg_start);
        } else {
          raw.push_back(parse_reaction(seg, line_no, seg_start, raw.size()));
        }
      }
      if (semi == std::string_view::npos) break;
      seg_start = semi + 1;
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (raw.empty()) throw ParseError(line_no, 1, "no reactions found");
  return assemble(raw, std::move(source));
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>())));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("stoichiometric entries must be integers or rational strings");
}

ReactionNetwork parse_json_network(std::string_view text, std::string source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.byte, std::string("JSON: ") + e.what());
  }
  try {
    auto species = doc.at("species").get<std::vector<std::string>>();
    const auto& reactions = doc.at("reactions");
    const std::size_t n = species.size(), m = reactions.size();
    QMatrix reac(n, m), prod(n, m);
    std::vector<std::string> names;
    std::vector<bool> rev;
    std::vector<std::optional<double>> kf(m), kr(m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& r = reactions[j];
      names.push_back(r.value("name", "R" + std::to_string(j + 1)));
      rev.push_back(r.value("reversible", false));
      if (r.contains("reactants") || r.contains("products")) {
        const auto& a = r.at("reactants");
        const auto& b = r.at("products");
        if (a.size() != n || b.size() != n) throw std::invalid_argument("reactant/product length mismatch");
        for (std::size_t i = 0; i < n; ++i) {
          reac(i, j) = json_rational(a[i]);
          prod(i, j) = json_rational(b[i]);
        }
        if (r.contains("stoich"))
          for (std::size_t i = 0; i < n; ++i)
            if (json_rational(r["stoich"][i]) != prod(i, j) - reac(i, j))
              throw std::invalid_argument("stoich disagrees with products - reactants");
      } else {
        const auto& s = r.at("stoich");
        if (s.size() != n) throw std::invalid_argument("stoich length mismatch in reaction " + names.back());
        for (std::size_t i = 0; i < n; ++i) {
          Rational q = json_rational(s[i]);
          if (sgn(q) < 0) reac(i, j) = -q;
          if (sgn(q) > 0) prod(i, j) = q;
        }
      }
      if (r.contains("kf")) kf[j] = r["kf"].get<double>();
      if (r.contains("kr")) kr[j] = r["kr"].get<double>();
    }
    ReactionNetwork net = make_network(std::move(species), std::move(names), std::move(reac), std::move(prod),
                                       std::move(rev), std::move(source));
    net.kf = std::move(kf);
    net.kr = std::move(kr);
    return net;
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string side_text(const ReactionNetwork& net, const QMatrix& side, std::size_t j) {
  std::string s;
  for (std::size_t i = 0; i < net.n(); ++i) {
    if (sgn(side(i, j)) == 0) continue;
    if (!s.empty()) s += " + ";
    if (side(i, j) != 1) s += side(i, j).get_str() + " ";
    s += net.species[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ReactionNetwork parse_network(std::string_view text, std::string source) {
  for (char c : text) {
    if (is_space(c)) continue;
    if (c == '{') return parse_json_network(text, std::move(source));
    break;
  }
  return parse_crn(text, std::move(source));
}

ReactionNetwork parse_network_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str(), path);
}

std::string serialize_crn(const ReactionNetwork& net) {
  std::string out;
  for (std::size_t j = 0; j < net.m(); ++j) {
    out += net.reaction_names[j] + ": " + side_text(net, net.reactants, j) + (net.reversible[j] ? " <-> " : " -> ") +
           side_text(net, net.products, j);
    if (net.kf[j] || net.kr[j]) {
      out += " ;";
      if (net.kf[j]) out += " kf=" + format_double(*net.kf[j]);
      if (net.kr[j]) out += " kr=" + format_double(*net.kr[j]);
    }
    out += "\n";
  }
  return out;
}

std::string serialize_json(const ReactionNetwork& net) {
  json doc;
  doc["species"] = net.species;
  const bool catalytic = !is_non_catalytic(net);
  json reactions = json::array();
  for (std::size_t j = 0; j < net.m(); ++j) {
    json r;
    r["name"] = net.reaction_names[j];
    r["reversible"] = static_cast<bool>(net.reversible[j]);
    json stoich = json::array(), reac = json::array(), prod = json::array();
    for (std::size_t i = 0; i < net.n(); ++i) {
      stoich.push_back(net.gamma(i, j).get_str());
      reac.push_back(net.reactants(i, j).get_str());
      prod.push_back(net.products(i, j).get_str());
    }
    r["stoich"] = stoich;
    if (catalytic) {
      r["reactants"] = reac;
      r["products"] = prod;
    }
    if (net.kf[j]) r["kf"] = *net.kf[j];
    if (net.kr[j]) r["kr"] = *net.kr[j];
    reactions.push_back(r);
  }
  doc["reactions"] = reactions;
  return doc.dump(2) + "\n";
}

}  // namespace crn
