# Finite kernel-lattice models
