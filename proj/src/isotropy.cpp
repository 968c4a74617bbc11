#include "ninf/isotropy.hpp"

#include <cctype>

#include "ninf/error.hpp"

namespace ninf {

SpectrumExpr SpectrumExpr::orbit(std::shared_ptr<const SubgroupLattice> lattice,
                                 SubgroupId k) {
  if (k < 0 || static_cast<std::size_t>(k) >= lattice->size())
    throw DomainError("subgroup id out of range");
  return SpectrumExpr(std::make_shared<const Node>(
      Node{Kind::Orbit, std::move(lattice), k, -1, nullptr, nullptr}));
}

SpectrumExpr SpectrumExpr::idempotent(std::shared_ptr<const SubgroupLattice> lattice,
                                      ClassId h) {
  if (h < 0 || static_cast<std::size_t>(h) >= lattice->num_classes())
    throw DomainError("class index out of range");
  return SpectrumExpr(std::make_shared<const Node>(
      Node{Kind::IdempotentSphere, std::move(lattice), -1, h, nullptr, nullptr}));
}

SpectrumExpr SpectrumExpr::rational_sphere(std::shared_ptr<const SubgroupLattice> lattice) {
  return SpectrumExpr(std::make_shared<const Node>(
      Node{Kind::RationalSphere, std::move(lattice), -1, -1, nullptr, nullptr}));
}

SpectrumExpr SpectrumExpr::point(std::shared_ptr<const SubgroupLattice> lattice) {
  return SpectrumExpr(std::make_shared<const Node>(
      Node{Kind::Point, std::move(lattice), -1, -1, nullptr, nullptr}));
}

SpectrumExpr SpectrumExpr::wedge(SpectrumExpr a, SpectrumExpr b) {
  return SpectrumExpr(std::make_shared<const Node>(
      Node{Kind::Wedge, nullptr, -1, -1,
           std::make_shared<const SpectrumExpr>(std::move(a)),
           std::make_shared<const SpectrumExpr>(std::move(b))}));
}

SpectrumExpr SpectrumExpr::smash(SpectrumExpr a, SpectrumExpr b) {
  return SpectrumExpr(std::make_shared<const Node>(
      Node{Kind::Smash, nullptr, -1, -1,
           std::make_shared<const SpectrumExpr>(std::move(a)),
           std::make_shared<const SpectrumExpr>(std::move(b))}));
}

const std::shared_ptr<const SubgroupLattice> &SpectrumExpr::common_lattice() const {
  if (is_leaf())
    return node_->lattice;
  const auto &l = left().common_lattice();
  const auto &r = right().common_lattice();
  if (l != r)
    throw DomainError("spectrum expression mixes different groups");
  return l;
}

const SubgroupLattice &SpectrumExpr::lattice() const { return *common_lattice(); }

std::string SpectrumExpr::to_string() const {
  switch (kind()) {
  case Kind::Orbit:
    return "orbit:" + node_->lattice->group().name() + "/" +
           node_->lattice->class_label(node_->lattice->class_of(node_->subgroup));
  case Kind::IdempotentSphere:
    return "idem:(" + node_->lattice->class_label(node_->class_id) + ")";
  case Kind::RationalSphere:
    return "SQ";
  case Kind::Point:
    return "pt";
  case Kind::Wedge:
    return "(" + left().to_string() + " v " + right().to_string() + ")";
  case Kind::Smash:
    return "(" + left().to_string() + " ^ " + right().to_string() + ")";
  }
  return {};
}

namespace {

class ExprParser {
public:
  ExprParser(std::shared_ptr<const SubgroupLattice> lattice, std::string_view text)
      : lat_(std::move(lattice)), text_(text) {}

  SpectrumExpr parse() {
    SpectrumExpr e = wedge();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected input in spectrum expression", pos_);
    return e;
  }

private:
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' ||
           c == '\'' || c == '/' || c == ':' || c == '.';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  // Next word without consuming it.
  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && word_char(text_[end]))
      ++end;
    return text_.substr(pos_, end - pos_);
  }

  SpectrumExpr wedge() {
    SpectrumExpr e = smash();
    while (peek_word() == "v") {
      ++pos_;
      e = SpectrumExpr::wedge(std::move(e), smash());
    }
    return e;
  }

  SpectrumExpr smash() {
    SpectrumExpr e = atom();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        e = SpectrumExpr::smash(std::move(e), atom());
      } else {
        return e;
      }
    }
  }

  SpectrumExpr atom() {
    skip_ws();
    if (pos_ == text_.size())
      throw ParseError("expected a spectrum", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      SpectrumExpr e = wedge();
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    const std::size_t start = pos_;
    const std::string word(peek_word());
    if (word.empty())
      throw ParseError("expected a spectrum", pos_);
    pos_ += word.size();
    if (word == "SQ")
      return SpectrumExpr::rational_sphere(lat_);
    if (word == "pt")
      return SpectrumExpr::point(lat_);
    if (word == "idem:") {
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] != '(')
        throw ParseError("expected '(' after idem:", pos_);
      ++pos_;
      const std::size_t label_pos = (skip_ws(), pos_);
      const std::string label(peek_word());
      pos_ += label.size();
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')' after idempotent class", pos_);
      ++pos_;
      return SpectrumExpr::idempotent(lat_, resolve(label, label_pos));
    }
    if (word.rfind("orbit:", 0) == 0) {
      const std::string rest = word.substr(6);
      const auto slash = rest.find('/');
      if (slash == std::string::npos)
        throw ParseError("expected orbit:G/K", start + 6);
      const std::string gname = rest.substr(0, slash);
      auto lower = [](std::string s) {
        for (char &c : s)
          c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
      };
      if (lower(gname) != lower(lat_->group().name()) && lower(gname) != "g")
        throw ParseError("orbit refers to group '" + gname + "', expected '" +
                             lat_->group().name() + "'",
                         start + 6);
      const ClassId c = resolve(rest.substr(slash + 1), start + 7 + slash);
      return SpectrumExpr::orbit(lat_, lat_->representative(c));
    }
    throw ParseError("unknown spectrum '" + word + "'", start);
  }

  ClassId resolve(const std::string &label, std::size_t at) {
    try {
      return lat_->class_by_label(label);
    } catch (const ParseError &e) {
      throw ParseError(e.what(), at);
    }
  }

  std::shared_ptr<const SubgroupLattice> lat_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

SpectrumExpr parse_spectrum(std::shared_ptr<const SubgroupLattice> lattice,
                            std::string_view text) {
  return ExprParser(std::move(lattice), text).parse();
}

bool IsotropySet::empty() const {
  for (bool b : mask_)
    if (b)
      return false;
  return true;
}

std::vector<ClassId> IsotropySet::members() const {
  std::vector<ClassId> out;
  for (std::size_t c = 0; c < mask_.size(); ++c)
    if (mask_[c])
      out.push_back(static_cast<ClassId>(c));
  return out;
}

IsotropySet IsotropySet::operator|(const IsotropySet &other) const {
  IsotropySet r = *this;
  for (std::size_t c = 0; c < mask_.size(); ++c)
    r.mask_[c] = mask_[c] || other.mask_[c];
  return r;
}

IsotropySet IsotropySet::operator&(const IsotropySet &other) const {
  IsotropySet r = *this;
  for (std::size_t c = 0; c < mask_.size(); ++c)
    r.mask_[c] = mask_[c] && other.mask_[c];
  return r;
}

namespace {

IsotropySet isotropy_of(const SpectrumExpr &x, const SubgroupLattice &lat) {
  IsotropySet out(lat.num_classes());
  switch (x.kind()) {
  case SpectrumExpr::Kind::Orbit: {
    // Φ^H Σ∞G/K₊ = Σ∞(G/K)^H₊, nonempty iff H is subconjugate to K.
    const ClassId k = lat.class_of(x.subgroup());
    for (ClassId c = 0; c < static_cast<ClassId>(lat.num_classes()); ++c)
      if (lat.subconjugate(c, k))
        out.insert(c);
    return out;
  }
  case SpectrumExpr::Kind::IdempotentSphere:
    out.insert(x.class_id());
    return out;
  case SpectrumExpr::Kind::RationalSphere:
    for (ClassId c = 0; c < static_cast<ClassId>(lat.num_classes()); ++c)
      out.insert(c);
    return out;
  case SpectrumExpr::Kind::Point:
    return out;
  case SpectrumExpr::Kind::Wedge:
    return isotropy_of(x.left(), lat) | isotropy_of(x.right(), lat);
  case SpectrumExpr::Kind::Smash:
    return isotropy_of(x.left(), lat) & isotropy_of(x.right(), lat);
  }
  return out;
}

} // namespace

IsotropySet isotropy(const SpectrumExpr &x) {
  const SubgroupLattice &lat = x.lattice();
  return isotropy_of(x, lat);
}

bool is_free(const SpectrumExpr &x) {
  const IsotropySet iso = isotropy(x);
  for (ClassId c : iso.members())
    if (c != 0)
      return false;
  return true;
}

} // namespace ninf
