class BracketConfig:
    samples = 200
    # random rational coordinates have numerator and denominator bounded by this
    coord_height = 5
    # symbolic checks are the default up to this rank, sampled above it
    symbolic_max_r = 3
    workers = 1
