"""
Search statistics recorded across many tiling searches.
"""

import pickle
from collections import defaultdict


class SearchStats:
    '''
    This class records statistics while a batch of searches runs, for instance all
    orderings of a bottlegraph or all candidates of a critical chromatic scan.

    Attributes
    ------------
    nodes : dict
        Total search nodes per label.
    searches : dict
        Number of searches per label.
    timeouts : list
        Labels of the searches that exhausted their budget.
    '''

    def __init__(self):
        self.nodes = defaultdict(int)
        self.searches = defaultdict(int)
        self.timeouts = []

    def record(self, label, answer):
        """
        Parameters
        -----------
        label : str
            Free-form tag, for example the ordering a search ran on.
        answer : TilingAnswer
            The answer whose node count is added.
        """
        self.nodes[label] += answer.nodes_explored
        self.searches[label] += 1
        if answer.timed_out:
            self.timeouts.append(label)

    def merge(self, other):
        for label, count in other.nodes.items():
            self.nodes[label] += count
        for label, count in other.searches.items():
            self.searches[label] += count
        self.timeouts.extend(other.timeouts)

    @property
    def total_nodes(self):
        return sum(self.nodes.values())

    def reset(self):
        self.nodes = defaultdict(int)
        self.searches = defaultdict(int)
        self.timeouts = []

    def save(self, filename):
        '''
        Parameters
        ------------
        filename : String
            The filename to use to save the SearchStats as a pickle object.
        '''
        with open(filename, 'wb') as f:
            pickle.dump(self, f)

    @staticmethod
    def load(filename):
        with open(filename, 'rb') as f:
            return pickle.load(f)
