#pragma once

#include <string>
#include <vector>

namespace hmsl {

// One reference identity or regression check with a one-line detail.
struct IdentityCheck {
  int criterion = 0;  // 1: symbolic identities, 2: real line, 3: F25 line, 4: char-3 profile
  std::string name;
  bool pass = false;
  std::string detail;
};

// The full reference suite. Every check is exact; none depends on a search.
std::vector<IdentityCheck> reference_identity_suite();

bool all_pass(const std::vector<IdentityCheck>& checks);

}  // namespace hmsl
