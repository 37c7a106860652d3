#include "prodlog/errors.hpp"

namespace prodlog {

void throw_domain(const std::string& what) { throw DomainError(what); }

}  // namespace prodlog
