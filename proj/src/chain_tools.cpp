#include "blowdown/chain_tools.hpp"

#include "blowdown/errors.hpp"
#include "blowdown/tsingular.hpp"

namespace blowdown {

namespace {

Integer parse_integer(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::string chain_classify_text(const std::string& chain) {
  const auto t = classify_class_t(parse_chain(chain));
  std::string out = "p=" + t.p.get_str() + " q=" + t.q.get_str();
  if (t.rdp) return out + " rdp";
  if (!t.class_t) return out + " not-classT";
  return out + " classT d=" + t.class_t->d.get_str() + " n=" + t.class_t->n.get_str() +
         " a=" + t.class_t->a.get_str();
}

std::string chain_expand_text(const std::string& p, const std::string& q) {
  return format_chain(hj_expand(parse_integer(p), parse_integer(q)));
}

std::string chain_homology_text(const std::string& chain) {
  const Coeffs c = parse_chain(chain);
  const auto t = classify_class_t(c);
  std::string out = "boundary=" + boundary_homology(c).group.to_string() + " milnor=";
  return out + (t.is_class_t() ? milnor_h1(t).to_string() : "none");
}

std::string chain_enumerate_text(std::size_t max_len, bool include_rdp) {
  std::string out;
  for (const auto& c : wahl_enumerate(max_len, include_rdp)) out += format_chain(c) + "\n";
  return out;
}

}  // namespace blowdown
