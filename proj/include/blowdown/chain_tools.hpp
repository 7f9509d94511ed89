#pragma once

#include <cstddef>
#include <string>

namespace blowdown {

/// "p=72 q=11 classT d=2 n=6 a=1"; "rdp" or "not-classT" in place of the triple.
std::string chain_classify_text(const std::string& chain);
/// "[7,3,2,2,2,2]"
std::string chain_expand_text(const std::string& p, const std::string& q);
/// "boundary=Z/4 milnor=Z/2"; milnor is "none" when the chain is not class T.
std::string chain_homology_text(const std::string& chain);
/// One chain per line.
std::string chain_enumerate_text(std::size_t max_len, bool include_rdp = true);

}  // namespace blowdown
