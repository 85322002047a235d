"""Exact Mukai-lattice calculus on Enriques surfaces."""
