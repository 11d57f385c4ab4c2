#pragma once

namespace acceptance {

/// +1 when z^2 = a x^2 + b y^2 has a nonzero solution over Q_p, -1 otherwise, decided by
/// exhaustive search for a liftable primitive solution. p = 0 stands for the real place.
int local_solvability(long a, long b, long p);

}  // namespace acceptance
