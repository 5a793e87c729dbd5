#pragma once

#include <stdexcept>
#include <string>

#define HW_STRINGIFY_(x) #x
#define HW_TOSTRING(x) HW_STRINGIFY_(x)

// Precondition violated by the caller.
#define HW_DOMAIN_CHECK(cond, msg)                                            \
  do {                                                                        \
    if (!(cond))                                                              \
      throw std::domain_error(std::string(__FILE__ ":" HW_TOSTRING(           \
                                  __LINE__) ": ") + (msg));                   \
  } while (0)

// Internal invariant failed.
#define HW_LOGIC_CHECK(cond, msg)                                             \
  do {                                                                        \
    if (!(cond))                                                              \
      throw std::logic_error(std::string(__FILE__ ":" HW_TOSTRING(            \
                                 __LINE__) ": ") + (msg));                    \
  } while (0)
