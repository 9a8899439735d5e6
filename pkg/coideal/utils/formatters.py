'''
Text formatting for reports: canonical JSON text and Markdown tables
@author: coideal developers
'''

# Imports
import json
import textwrap
from typing import Any, Dict, List

# Type aliases
Row = Dict[str, Any]


class MarkdownTableFormatter:
    '''
    Renders rows as a Markdown pipe table. The column dictionary maps row keys
    to headers and preserves the sequence of the table columns.
    '''

    def __init__(self, columns: Row, rowdata: List[Row], maxlength: int=60) -> None:
        self.columns = columns
        self.data = rowdata
        self.maxlength = maxlength
        self.keys = list(columns.keys())

    def cell(self, item: Row, key: str) -> str:
        value = item.get(key)
        text = '' if value is None else ellipsis(str(value), self.maxlength)
        return text.replace('|', '\\|').replace('\n', ' ')

    def render(self) -> str:
        widths = {k: max([len(str(self.columns[k]))] + [len(self.cell(item, k)) for item in self.data]) for k in self.keys}
        lines = ['| ' + ' | '.join(str(self.columns[k]).ljust(widths[k]) for k in self.keys) + ' |',
                 '|' + '|'.join('-' * (widths[k] + 2) for k in self.keys) + '|']
        for item in self.data:
            lines.append('| ' + ' | '.join(self.cell(item, k).ljust(widths[k]) for k in self.keys) + ' |')
        return '\n'.join(lines)


def ellipsis(text: str, length: int) -> str:
    '''
    Shortens text to at most length characters, ending it in "..."
    '''
    try:
        return textwrap.shorten(text, length, placeholder='...')
    except (TypeError, ValueError):
        return text


def dumpJson(data: Any) -> str:
    '''
    Serializes data with ordered keys so that equal data always yields equal text.
    Exact scalars without a JSON type (fractions, field elements) become strings.
    '''
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False, default=str) + '\n'
