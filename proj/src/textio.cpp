#include "pcengel/textio.hpp"

#include <fstream>
#include <sstream>

namespace pcengel {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw input_error("line " + std::to_string(line) + ": " + msg);
}

long long parse_int(size_t line, const std::string& s) {
  try {
    size_t pos;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(line, "malformed integer '" + s + "'");
    return v;
  } catch (const input_error&) {
    throw;
  } catch (...) {
    fail(line, "malformed integer '" + s + "'");
  }
}

// <word> over named generators; `eps` is the empty word.
Word parse_word(size_t line, const std::string& text,
                const std::vector<std::string>& gen_names) {
  std::string s;
  for (char c : text)
    if (!isspace((unsigned char)c)) s += c;
  if (s.empty()) fail(line, "empty word");
  if (s == "eps") return {};
  Word w;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    std::string factor = s.substr(pos, star == std::string::npos ? star : star - pos);
    if (factor.empty()) fail(line, "empty factor in word");
    size_t caret = factor.find('^');
    std::string sym = factor.substr(0, caret);
    long long k = 1;
    if (caret != std::string::npos)
      k = parse_int(line, factor.substr(caret + 1));
    int idx = -1;
    for (size_t i = 0; i < gen_names.size(); ++i)
      if (gen_names[i] == sym) idx = (int)i;
    if (idx < 0) fail(line, "unknown generator symbol '" + sym + "'");
    w.emplace_back(idx, (int)k);
    pos = star == std::string::npos ? s.size() : star + 1;
    if (star != std::string::npos && pos == s.size())
      fail(line, "trailing '*' in word");
  }
  return w;
}

Elt eval_word(const PcGroup& g, const Word& w) {
  Elt x = g.identity();
  for (auto [i, k] : w) x = g.mul(x, g.power(g.gen(i), k));
  return x;
}

}  // namespace

std::vector<CatalogEntry> parse_text(const std::string& content) {
  std::vector<CatalogEntry> entries;
  std::istringstream in(content);
  std::string line;
  size_t ln = 0;

  auto find_entry = [&](const std::string& name) -> CatalogEntry* {
    for (auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  };

  while (std::getline(in, line)) {
    ++ln;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (toks[0] == "group") {
      if (toks.size() != 2) fail(ln, "expected: group <name>");
      PcGroup::Spec spec;
      spec.name = toks[1];
      if (find_entry(spec.name)) fail(ln, "duplicate group '" + spec.name + "'");
      size_t header = ln;
      bool closed = false;
      // raw relation text, resolved after all gens are known
      std::vector<std::tuple<size_t, std::string, std::string>> pow_lines;
      std::vector<std::tuple<size_t, std::string, std::string, std::string>> conj_lines;
      while (std::getline(in, line)) {
        ++ln;
        auto t = split_ws(line);
        if (t.empty() || t[0][0] == '#') continue;
        if (t[0] == "end") {
          closed = true;
          break;
        }
        if (t[0] == "gen") {
          if (t.size() != 3) fail(ln, "expected: gen <sym> <prime>");
          for (const auto& n : spec.gen_names)
            if (n == t[1]) fail(ln, "duplicate generator '" + t[1] + "'");
          long long p = parse_int(ln, t[2]);
          if (!is_prime(p)) fail(ln, "relative order " + t[2] + " is not prime");
          spec.gen_names.push_back(t[1]);
          spec.orders.push_back((int)p);
        } else if (t[0] == "pow") {
          if (t.size() < 4 || t[2] != "=") fail(ln, "expected: pow <sym> = <word>");
          std::string word = line.substr(line.find('=') + 1);
          pow_lines.emplace_back(ln, t[1], word);
        } else if (t[0] == "conj") {
          if (t.size() < 5 || t[3] != "=")
            fail(ln, "expected: conj <sym> <sym> = <word>");
          std::string word = line.substr(line.find('=') + 1);
          conj_lines.emplace_back(ln, t[1], t[2], word);
        } else {
          fail(ln, "unexpected '" + t[0] + "' inside group block");
        }
      }
      if (!closed) fail(header, "group block never closed with 'end'");
      if (spec.gen_names.empty()) fail(header, "group has no generators");

      auto gen_of = [&](size_t l, const std::string& sym) {
        for (size_t i = 0; i < spec.gen_names.size(); ++i)
          if (spec.gen_names[i] == sym) return (int)i;
        fail(l, "unknown generator symbol '" + sym + "'");
      };
      spec.powers.assign(spec.gen_names.size(), {});
      for (auto& [l, sym, word] : pow_lines)
        spec.powers[gen_of(l, sym)] = parse_word(l, word, spec.gen_names);
      for (auto& [l, a, b, word] : conj_lines) {
        int i = gen_of(l, a), j = gen_of(l, b);
        spec.conj[{i, j}] = parse_word(l, word, spec.gen_names);
      }

      CatalogEntry e;
      e.name = spec.name;
      try {
        e.group = std::make_shared<PcGroup>(std::move(spec));
      } catch (const input_error& ex) {
        fail(header, std::string("invalid presentation: ") + ex.what());
      }
      ConsistencyResult cr = e.group->consistency_check();
      if (!cr.ok) fail(header, "inconsistent presentation: " + cr.witness);
      entries.push_back(std::move(e));
    } else if (toks[0] == "aut") {
      if (toks.size() != 4 || toks[2] != "on")
        fail(ln, "expected: aut <name> on <group>");
      CatalogEntry* e = find_entry(toks[3]);
      if (!e) fail(ln, "unknown group '" + toks[3] + "'");
      const PcGroup& g = *e->group;
      std::string aname = toks[1];
      for (const auto& na : e->automorphisms)
        if (na.name == aname) fail(ln, "duplicate automorphism '" + aname + "'");
      size_t header = ln;
      std::vector<Elt> images(g.ngens(), g.identity());
      std::vector<bool> seen(g.ngens(), false);
      bool closed = false;
      while (std::getline(in, line)) {
        ++ln;
        auto t = split_ws(line);
        if (t.empty() || t[0][0] == '#') continue;
        if (t[0] == "end") {
          closed = true;
          break;
        }
        if (t.size() < 3 || t[1] != "->") fail(ln, "expected: <sym> -> <word>");
        int i;
        try {
          i = g.gen_index(t[0]);
        } catch (const input_error&) {
          fail(ln, "unknown generator symbol '" + t[0] + "'");
        }
        if (seen[i]) fail(ln, "duplicate image for '" + t[0] + "'");
        seen[i] = true;
        std::string word = line.substr(line.find("->") + 2);
        images[i] = eval_word(g, parse_word(ln, word, g.spec().gen_names));
      }
      if (!closed) fail(header, "aut block never closed with 'end'");
      for (int i = 0; i < g.ngens(); ++i)
        if (!seen[i])
          fail(header, "missing image for generator '" + g.gen_name(i) + "'");
      try {
        e->automorphisms.push_back(
            NamedAut{aname, Automorphism::from_images(g, std::move(images))});
      } catch (const input_error& ex) {
        fail(header, std::string("invalid automorphism: ") + ex.what());
      }
    } else {
      fail(ln, "expected 'group' or 'aut', got '" + toks[0] + "'");
    }
  }
  return entries;
}

std::vector<CatalogEntry> parse_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string serialize_word(const PcGroup& g, const Word& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += g.gen_name(w[i].first) + "^" + std::to_string(w[i].second);
  }
  return out;
}

std::string serialize_group(const PcGroup& g) {
  const auto& s = g.spec();
  std::string out = "group " + s.name + "\n";
  for (int i = 0; i < g.ngens(); ++i)
    out += "gen " + s.gen_names[i] + " " + std::to_string(s.orders[i]) + "\n";
  for (int i = 0; i < g.ngens(); ++i)
    if (!s.powers[i].empty())
      out += "pow " + s.gen_names[i] + " = " + serialize_word(g, s.powers[i]) + "\n";
  for (const auto& [key, w] : s.conj)
    out += "conj " + s.gen_names[key.first] + " " + s.gen_names[key.second] +
           " = " + serialize_word(g, w) + "\n";
  return out + "end\n";
}

std::string serialize_automorphism(const std::string& name, const Automorphism& phi) {
  const PcGroup& g = phi.group();
  std::string out = "aut " + name + " on " + g.name() + "\n";
  for (int i = 0; i < g.ngens(); ++i) {
    const Elt& img = phi.images()[i];
    Word w;
    for (int j = 0; j < g.ngens(); ++j)
      if (img.e[j]) w.emplace_back(j, img.e[j]);
    out += g.gen_name(i) + " -> " + serialize_word(g, w) + "\n";
  }
  return out + "end\n";
}

std::string serialize_entry(const CatalogEntry& e) {
  std::string out = serialize_group(*e.group);
  for (const auto& na : e.automorphisms)
    out += serialize_automorphism(na.name, na.phi);
  return out;
}

}  // namespace pcengel
