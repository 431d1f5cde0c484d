#include "hmsl/lines/target.hpp"

#include "hmsl/exact/integer.hpp"

namespace hmsl {

LocalTarget make_local_target(const SurfaceModel& model, long place, Line<Rational> line,
                              Rational precision) {
  if (place != 0 && (place < 2 || !is_prime(place))) throw DomainError("target place must be real or a prime");
  if (line.dim() != model.q1.nvars()) throw DomainError("target line has the wrong dimension");
  if (!lies_in(line, model.q1) || !lies_in(line, model.q2))
    throw DomainError("target line is not contained in q1 = q2 = 0 of the model");
  if (precision.sign() <= 0) throw DomainError("target precision must be positive");
  return {place, std::move(line), std::move(precision)};
}

}  // namespace hmsl
