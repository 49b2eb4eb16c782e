#pragma once

#include <string>
#include <vector>

namespace cgc {

struct NamedProgram {
  std::string name;
  std::string source;
};

/// The shipped WHILE programs. Loops are bounded for small inputs so the
/// concrete oracle stays finite under small rand policies.
const std::vector<NamedProgram> &while_corpus();

} // namespace cgc
