#pragma once

namespace datashare::detail {

extern const char cc_by_4_text[];
extern const char cc0_1_text[];
extern const char odbl_1_text[];

}  // namespace datashare::detail
