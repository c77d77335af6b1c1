class OrbitConfig:
    # expansions allowed per merge BFS before the result is marked truncated
    step_budget = 200_000
    # first merge pass lets the BFS wander this far above the scan height
    merge_slack = 2
    # the slack grows pass by pass up to this ceiling
    max_merge_slack = 8
    # consecutive passes without a merge before the slack stops growing
    merge_patience = 2
    # BFS depth when looking for a (±2, y, ±y) witness of a k=2 point
    witness_depth = 3
    workers = 1
