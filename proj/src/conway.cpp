#include "knotforge/conway.hpp"

#include <cctype>
#include <cstdlib>

namespace knotforge {

int poly_vertex_count(PolyBase b) {
  switch (b) {
    case PolyBase::P6: return 6;
    case PolyBase::P8: return 8;
    case PolyBase::P9: return 9;
    case PolyBase::P10: return 10;
  }
  return 0;
}

const char* poly_marker(PolyBase b) {
  switch (b) {
    case PolyBase::P6: return "6*";
    case PolyBase::P8: return "8*";
    case PolyBase::P9: return "9*";
    case PolyBase::P10: return "10*";
  }
  return "?";
}

bool ConwayNode::same_structure(const ConwayNode& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case NodeKind::Integer:
      if (value != o.value) return false;
      break;
    case NodeKind::Polyhedron:
      if (base != o.base) return false;
      break;
    case NodeKind::Plus:
      if (has_tail != o.has_tail) return false;
      break;
    default:
      break;
  }
  if (children.size() != o.children.size()) return false;
  for (size_t i = 0; i < children.size(); ++i)
    if (!children[i].same_structure(o.children[i])) return false;
  return true;
}

namespace {

struct Parser {
  const std::string& s;
  int pos = 0;
  int base_off = 0;  // offset of this fragment in the original input

  explicit Parser(const std::string& text, int off = 0) : s(text), base_off(off) {}

  SourceSpan here() const { return {base_off + pos, base_off + pos}; }
  SourceSpan span(int b, int e) const { return {base_off + b, base_off + e}; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, here());
  }

  char peek() const { return pos < (int)s.size() ? s[pos] : '\0'; }
  char at(int i) const { return i < (int)s.size() ? s[i] : '\0'; }
  bool done() const { return pos >= (int)s.size(); }

  // returns number of whitespace chars skipped
  int skip_ws() {
    int k = 0;
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos, ++k;
    return k;
  }

  int parse_int() {
    int b = pos;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    if (!std::isdigit((unsigned char)peek())) fail("expected digits");
    long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) throw ParseError("integer too large", span(b, pos));
      ++pos;
    }
    return neg ? (int)-v : (int)v;
  }

  ConwayNode parse_factor(bool at_branch_start, bool had_ws) {
    int b = pos;
    char c = peek();
    if (c == '-' && at(pos + 1) == '(') {
      ++pos;  // '-'
      ConwayNode inner = parse_group();
      ConwayNode n;
      n.kind = NodeKind::Negation;
      n.children.push_back(std::move(inner));
      n.span = span(b, pos);
      return n;
    }
    if (c == '(') {
      return parse_group();
    }
    if (c == '-' || std::isdigit((unsigned char)c)) {
      if (c == '-' && !at_branch_start && !had_ws)
        fail("'-' must follow a separator (use ',-n' or ' -n')");
      ConwayNode n;
      n.kind = NodeKind::Integer;
      n.value = parse_int();
      n.span = span(b, pos);
      if (std::isdigit((unsigned char)peek()))
        fail("unexpected digit");
      if (peek() == '-')
        fail("'-' directly after an integer; separate with ',' or space");
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ConwayNode parse_group() {
    ++pos;  // '('
    ConwayNode inner = parse_ram();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos;
    return inner;
  }

  bool starts_factor(bool at_branch_start, bool had_ws) {
    char c = peek();
    if (c == '(') return true;
    if (std::isdigit((unsigned char)c)) return true;
    if (c == '-' && (at(pos + 1) == '(' || std::isdigit((unsigned char)at(pos + 1))))
      return at_branch_start || had_ws || at(pos + 1) == '(';
    return false;
  }

  ConwayNode parse_seq() {
    int b = pos;
    std::vector<ConwayNode> factors;
    bool first = true;
    for (;;) {
      int ws = skip_ws();
      if (!starts_factor(first, ws > 0)) break;
      factors.push_back(parse_factor(first, ws > 0));
      first = false;
    }
    if (factors.empty()) fail("empty branch");
    if (factors.size() == 1) return std::move(factors[0]);
    bool all_int = true;
    for (auto& f : factors)
      if (f.kind != NodeKind::Integer) all_int = false;
    ConwayNode n;
    n.kind = all_int ? NodeKind::Sequence : NodeKind::Product;
    n.children = std::move(factors);
    n.span = span(b, pos);
    return n;
  }

  ConwayNode parse_ram() {
    int b = pos;
    std::vector<ConwayNode> items;
    items.push_back(parse_seq());
    skip_ws();
    while (peek() == ',') {
      ++pos;
      items.push_back(parse_seq());
      skip_ws();
    }
    ConwayNode node;
    if (items.size() == 1) {
      node = std::move(items[0]);
    } else {
      node.kind = NodeKind::Ramification;
      node.children = std::move(items);
      node.span = span(b, pos);
    }
    skip_ws();
    if (peek() == '+') {
      int pluses = 0;
      while (peek() == '+') ++pos, ++pluses;
      skip_ws();
      ConwayNode plus;
      plus.kind = NodeKind::Plus;
      plus.children.push_back(std::move(node));
      if (std::isdigit((unsigned char)peek())) {
        ConwayNode tail;
        tail.kind = NodeKind::Integer;
        int tb = pos;
        tail.value = parse_int() + (pluses - 1);
        tail.span = span(tb, pos);
        plus.has_tail = true;
        plus.children.push_back(std::move(tail));
      } else if (pluses >= 2) {
        ConwayNode tail;
        tail.kind = NodeKind::Integer;
        tail.value = pluses;
        tail.span = here();
        plus.has_tail = true;
        plus.children.push_back(std::move(tail));
      } else {
        plus.has_tail = false;
      }
      plus.span = span(b, pos);
      node = std::move(plus);
    }
    return node;
  }
};

bool is_polyhedral_text(const std::string& t) {
  for (char c : t)
    if (c == '*' || c == ':' || c == '.') return true;
  return false;
}

ConwayNode parse_fragment(const std::string& text, int off) {
  Parser p(text, off);
  ConwayNode n = p.parse_ram();
  p.skip_ws();
  if (!p.done()) p.fail("trailing input");
  return n;
}

ConwayNode parse_polyhedral(const std::string& t) {
  PolyBase base;
  int fill_off;
  if (t.rfind("10*", 0) == 0) {
    base = PolyBase::P10;
    fill_off = 3;
  } else if (t.rfind("6*", 0) == 0) {
    base = PolyBase::P6;
    fill_off = 2;
  } else if (t.rfind("8*", 0) == 0) {
    base = PolyBase::P8;
    fill_off = 2;
  } else if (t.rfind("9*", 0) == 0) {
    base = PolyBase::P9;
    fill_off = 2;
  } else if (std::isdigit((unsigned char)t[0]) && t.find('*') != std::string::npos) {
    throw ParseError("unknown basic polyhedron", {0, (int)t.find('*') + 1});
  } else {
    // bare "." / ":" style symbol is a 6* filling
    base = PolyBase::P6;
    fill_off = 0;
  }
  std::string fill = t.substr(fill_off);
  // A leading '.' leaves a unit in the first slot: ".2.2" is "6*1.2.2",
  // which is why "2.2.2.2" and ".2.2.2" are distinct symbols. The same
  // rule applies after an explicit marker ("9*.2 0" fills slot 2).
  if (fill.find('*') != std::string::npos)
    throw ParseError("'*' inside slot fill", {fill_off, (int)t.size()});

  // Split the fill into slot entries. '.' separates entries; a run of k ':'
  // characters separates entries and inserts 2k-1 unit slots between them.
  struct Field {
    std::string text;
    int off;
  };
  std::vector<Field> fields;
  if (!fill.empty()) {
    std::string cur;
    int cur_off = fill_off;
    bool have_cur = true;
    size_t i = 0;
    auto push_cur = [&]() {
      fields.push_back({cur, cur_off});
      cur.clear();
    };
    while (i < fill.size()) {
      char c = fill[i];
      if (c == '.') {
        push_cur();
        ++i;
        cur_off = fill_off + (int)i;
      } else if (c == ':') {
        push_cur();
        // a ':' separates fields and owns one unit slot; the empty field
        // between consecutive colons is a further unit slot, so "a::b"
        // leaves three units between a and b
        bool first_colon = true;
        while (i < fill.size() && fill[i] == ':') {
          if (!first_colon) fields.push_back({"1", fill_off + (int)i});
          fields.push_back({"1", fill_off + (int)i});
          first_colon = false;
          ++i;
        }
        cur_off = fill_off + (int)i;
      } else {
        cur += c;
        ++i;
      }
    }
    if (have_cur) push_cur();
  }

  int V = poly_vertex_count(base);
  if ((int)fields.size() > V)
    throw ParseError("too many slots for " + std::string(poly_marker(base)),
                     {0, (int)t.size()});
  ConwayNode node;
  node.kind = NodeKind::Polyhedron;
  node.base = base;
  node.span = {0, (int)t.size()};
  bool lead = !fields.empty() &&
              fields[0].text.find_first_not_of(' ') == std::string::npos;
  node.poly_form = lead                                  ? PolyForm::LeadDot
                   : fill.find(':') != std::string::npos ? PolyForm::Colon
                                                         : PolyForm::Dotted;
  for (int i = 0; i < V; ++i) {
    if (i < (int)fields.size()) {
      std::string ft = fields[i].text;
      // trim
      size_t b = ft.find_first_not_of(' ');
      if (b == std::string::npos) ft.clear();
      if (ft.empty()) {
        ConwayNode unit;
        unit.kind = NodeKind::Integer;
        unit.value = 1;
        unit.span = {fields[i].off, fields[i].off};
        node.children.push_back(unit);
      } else {
        node.children.push_back(parse_fragment(fields[i].text, fields[i].off));
      }
    } else {
      ConwayNode unit;
      unit.kind = NodeKind::Integer;
      unit.value = 1;
      unit.span = {(int)t.size(), (int)t.size()};
      node.children.push_back(unit);
    }
  }
  return node;
}

// Integer(0) is legal only as the trailing element of a Sequence (the "n 0"
// rotation idiom); everywhere else it is an input error.
void validate_zeros(const ConwayNode& n, bool zero_ok) {
  switch (n.kind) {
    case NodeKind::Integer:
      if (n.value == 0 && !zero_ok)
        throw ParseError("zero tangle only allowed as a sequence tail", n.span);
      return;
    case NodeKind::Sequence:
      for (size_t i = 0; i < n.children.size(); ++i)
        validate_zeros(n.children[i], i + 1 == n.children.size());
      return;
    default:
      for (auto& c : n.children) validate_zeros(c, false);
      return;
  }
}

void number_ints(ConwayNode& n, int& next) {
  if (n.kind == NodeKind::Integer) {
    n.slot_id = next++;
    return;
  }
  for (auto& c : n.children) number_ints(c, next);
}

void collect_ints(ConwayNode& n, std::vector<ConwayNode*>& out) {
  if (n.kind == NodeKind::Integer) {
    out.push_back(&n);
    return;
  }
  for (auto& c : n.children) collect_ints(c, out);
}

bool is_unit(const ConwayNode& n) {
  return n.kind == NodeKind::Integer && n.value == 1;
}

void print_node(const ConwayNode& n, std::string& out);

void print_child_of_ram(const ConwayNode& c, std::string& out) {
  bool paren = c.kind == NodeKind::Ramification || c.kind == NodeKind::Plus;
  if (paren) out += '(';
  print_node(c, out);
  if (paren) out += ')';
}

void print_factor(const ConwayNode& f, std::string& out) {
  switch (f.kind) {
    case NodeKind::Integer:
      out += std::to_string(f.value);
      return;
    case NodeKind::Negation:
      print_node(f, out);
      return;
    default:
      out += '(';
      print_node(f, out);
      out += ')';
      return;
  }
}

void print_node(const ConwayNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Integer:
      out += std::to_string(n.value);
      return;
    case NodeKind::Sequence:
    case NodeKind::Product:
      for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ' ';
        print_factor(n.children[i], out);
      }
      return;
    case NodeKind::Ramification:
      for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ',';
        print_child_of_ram(n.children[i], out);
      }
      return;
    case NodeKind::Plus:
      print_node(n.children[0], out);
      out += '+';
      if (n.has_tail) out += std::to_string(n.children[1].value);
      return;
    case NodeKind::Negation:
      out += "-(";
      print_node(n.children[0], out);
      out += ')';
      return;
    case NodeKind::Polyhedron: {
      int last = -1;
      for (int i = 0; i < (int)n.children.size(); ++i)
        if (!is_unit(n.children[i])) last = i;
      if (last < 0) {
        out += poly_marker(n.base);
        return;
      }
      std::string body;
      int pending_units = 0;
      bool emitted = false;
      for (int i = 0; i <= last; ++i) {
        const ConwayNode& c = n.children[i];
        if (is_unit(c)) {
          ++pending_units;
          continue;
        }
        if (!emitted) {
          // leading units: the empty lead field is one unit, then each ':'
          // adds two ("." = 1, ":" = 2, ":." = 3, "::" = 4, ...)
          body.append(pending_units / 2, ':');
          if (pending_units % 2) body += '.';
        } else if (pending_units == 0) {
          body += '.';
        } else {
          // interior units: each ':' owns two unit slots except the first
          // (":" = 1, ":." = 2, "::" = 3, "::." = 4, ...)
          body.append((pending_units + 1) / 2, ':');
          if (pending_units % 2 == 0) body += '.';
        }
        pending_units = 0;
        print_node(c, body);
        emitted = true;
      }
      // 6* symbols with separators are written bare, table-style
      bool bare = n.base == PolyBase::P6 &&
                  body.find_first_of(".:") != std::string::npos;
      if (!bare) out += poly_marker(n.base);
      out += body;
      return;
    }
  }
}

}  // namespace

ConwayNode parse_conway(const std::string& text) {
  // trim
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw ParseError("empty symbol", {0, 0});
  size_t e = text.find_last_not_of(" \t\r\n");
  std::string t = text.substr(b, e - b + 1);

  ConwayNode node = is_polyhedral_text(t) ? parse_polyhedral(t)
                                          : parse_fragment(t, 0);
  validate_zeros(node, false);
  renumber_slots(node);
  return node;
}

std::string print_canonical(const ConwayNode& ast) {
  std::string out;
  print_node(ast, out);
  return out;
}

int crossing_count(const ConwayNode& ast) {
  switch (ast.kind) {
    case NodeKind::Integer:
      return ast.value < 0 ? -ast.value : ast.value;
    case NodeKind::Plus: {
      int c = crossing_count(ast.children[0]);
      if (ast.has_tail)
        c += crossing_count(ast.children[1]);
      else
        c += 1;
      return c;
    }
    default: {
      int c = 0;
      for (auto& ch : ast.children) c += crossing_count(ch);
      return c;
    }
  }
}

void renumber_slots(ConwayNode& ast) {
  int next = 0;
  number_ints(ast, next);
}

std::vector<ConwayNode*> integer_slots(ConwayNode& ast) {
  std::vector<ConwayNode*> out;
  collect_ints(ast, out);
  return out;
}

std::vector<const ConwayNode*> integer_slots(const ConwayNode& ast) {
  std::vector<ConwayNode*> out;
  collect_ints(const_cast<ConwayNode&>(ast), out);
  return std::vector<const ConwayNode*>(out.begin(), out.end());
}

}  // namespace knotforge
