class Messages:
  ML_EVAL = {
      "done": lambda alpha, beta, n, path: f"📈 E_{alpha:g},{beta:g}(z) at {n} points -> {path}",
  }

  COEFF_CHECK = {
      "done": lambda n, path: f"🧮 Gamma-ratio test on {n} values of alpha -> {path}",
      "min_deficit": lambda alpha, deficit: (
          f"   smallest deficit 1/2 - ratio on (0, 1): {deficit:.6e} at alpha={alpha:g}"
      ),
      "at_one": lambda deficit: f"   deficit at alpha=1: {deficit:.3e}",
      "mismatch": lambda path: f"   coefficient comparison a_n vs b_n -> {path}",
      "too_few": "coeff-check needs at least two values of alpha",
  }

  IDENTITY_CHECK = {
      "done": lambda identity, alpha, sup_gap, argmax_t, path: (
          f"🔍 {identity} alpha={alpha:g}: sup |gap| = {sup_gap:.6e} at t={argmax_t:g} -> {path}"
      ),
  }

  LEMMA_CHECK = {
      "done": lambda alpha, n_max, worst, path: (
          f"🔍 product family n=0..{n_max} alpha={alpha:g}: max |residual| = {worst:.6e} -> {path}"
      ),
  }

  SOLVE_LOGISTIC = {
      "done": lambda alpha, u_end, path: f"📈 PECE alpha={alpha:g}: u(T) = {u_end:.10f} -> {path}",
      "compare": lambda sup_diff: f"   max |u_west - u_fabm| = {sup_diff:.6e}",
      "no_series": lambda u0: f"   West series skipped: it diverges for u0={u0:g} (needs u0 > 1/2)",
  }

  WEST_RESIDUAL = {
      "done": lambda alpha, sup_residual, argmax_t, path: (
          f"🧪 West series alpha={alpha:g}: sup |residual| = {sup_residual:.6e} at t={argmax_t:g} -> {path}"
      ),
  }

  FIGURE1 = {
      "done": lambda alpha, sup_gap, argmax_t, path: (
          f"📊 E(-2x) vs E(-x)^2 alpha={alpha:g}: sup |gap| = {sup_gap:.6e} at t={argmax_t:g} -> {path}"
      ),
      "svg": lambda path: f"🖼️ plot -> {path}",
  }

  ERRORS = {
      "usage": lambda error: f"❌ Usage error: {error}",
      "io": lambda error: f"❌ Cannot write results: {error}",
      "domain": lambda error: f"❌ {error}",
  }
