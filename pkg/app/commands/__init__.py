from app.commands import analysis, coloring, experiment, graph

COMMAND_GROUPS = [graph, analysis, coloring, experiment]
