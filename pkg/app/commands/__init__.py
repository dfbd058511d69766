from app.commands.base import CommandGroup
from app.commands.bytecode import group as bytecode_group
from app.commands.types import group as types_group
from app.commands.prop import group as prop_group
from app.commands.process import group as process_group
from app.commands.goals import group as goals_group
from app.commands.repl import group as repl_group

commands = CommandGroup()

# Include all command groups
commands.include(bytecode_group)
commands.include(types_group)
commands.include(prop_group)
commands.include(process_group)
commands.include(goals_group)
commands.include(repl_group)
